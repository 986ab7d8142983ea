#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "topvertex/partition.hpp"

using namespace topvertex;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
}

TEST_CASE("partition basics") {
    CHECK(P({}).size() == 0);
    CHECK(P({3, 1, 1}).size() == 5);
    CHECK(P({3, 1, 1}).length() == 3);
    CHECK(P({3, 1, 1}).conjugate() == P({3, 1, 1}));
    CHECK(P({4, 2, 1}).conjugate() == P({3, 2, 1, 1}));
    CHECK(P({3, 1}).contains(P({2, 1})));
    CHECK_FALSE(P({3, 1}).contains(P({1, 1, 1})));
    CHECK(P({3, 1, 1}).str() == "[3,1,1]");
    CHECK(P({}).str() == "[]");
    CHECK(Partition::parse("[3,1,1]") == P({3, 1, 1}));
    CHECK(Partition::parse("[]") == P({}));
    CHECK(Partition::parse("2,2") == P({2, 2}));
    CHECK_THROWS(Partition::parse("[1,2]"));
}

TEST_CASE("kappa examples and conjugation antisymmetry") {
    CHECK(kappa(P({})) == 0);
    CHECK(kappa(P({2})) == 2);
    CHECK(kappa(P({1, 1})) == -2);
    for (const auto& mu : enumerate_partitions(8)) {
        CHECK(kappa(mu) % 2 == 0);
        CHECK(kappa(mu.conjugate()) == -kappa(mu));
        CHECK(mu.conjugate().conjugate() == mu);
    }
}

TEST_CASE("enumeration order and counts") {
    auto e0 = enumerate_partitions(0);
    REQUIRE(e0.size() == 1);
    CHECK(e0[0] == P({}));
    auto e2 = enumerate_partitions(2);
    REQUIRE(e2.size() == 4);
    CHECK(e2[0] == P({}));
    CHECK(e2[1] == P({1}));
    CHECK(e2[2] == P({2}));
    CHECK(e2[3] == P({1, 1}));
    CHECK(enumerate_partitions(4).size() == 12);  // p(0)+...+p(4)
    // distinctness
    auto e6 = enumerate_partitions(6);
    for (size_t i = 0; i < e6.size(); ++i)
        for (size_t j = i + 1; j < e6.size(); ++j) CHECK(e6[i] != e6[j]);
}

TEST_CASE("hook exponent examples") {
    CHECK(hook_exponent(P({}), P({}), 1, 1) == -1);
    CHECK(hook_exponent(P({1}), P({1}), 1, 1) == 1);
    CHECK(hook_exponent(P({2}), P({}), 1, 2) == 0);
}

TEST_CASE("f_mu examples") {
    CHECK(f_mu(P({})).is_zero());
    CHECK(f_mu(P({1})) == QRational(1));
    CHECK(f_mu(P({2})) == QRational::q_power(1) + QRational(1));
}

TEST_CASE("c_table examples") {
    CHECK(c_table(P({}), P({})).coeffs().empty());
    auto t11 = c_table(P({1}), P({1})).coeffs();
    REQUIRE(t11.size() == 2);
    CHECK(t11.at(-1) == 1);
    CHECK(t11.at(1) == 1);
    auto t10 = c_table(P({1}), P({})).coeffs();
    REQUIRE(t10.size() == 1);
    CHECK(t10.at(0) == 1);
}

TEST_CASE("c_table sum rules and conjugation (A.2)/(A.3)") {
    auto all5 = enumerate_partitions(5);
    for (const auto& mu : all5) {
        for (const auto& nu : all5) {
            CkTable t = c_table(mu, nu);
            CHECK(t.total() == mu.size() + nu.size());
            CHECK(2 * t.weighted_total() == kappa(mu) + kappa(nu));
            CkTable tc = c_table(mu.conjugate(), nu.conjugate());
            for (const auto& [k, c] : t.coeffs()) {
                auto it = tc.coeffs().find(-k);
                REQUIRE(it != tc.coeffs().end());
                CHECK(it->second == c);
            }
            CHECK(tc.coeffs().size() == t.coeffs().size());
        }
    }
}

TEST_CASE("c_table equals arm/leg hook multiset of (mu, nu^t)") {
    // C_k(mu,nu) multiset = {a_mu(s)+l_{nu^t}(s)+1 : s in mu}
    //                     u {-(a_{nu^t}(s)+l_mu(s)+1) : s in nu^t}
    for (const auto& mu : enumerate_partitions(4)) {
        for (const auto& nu : enumerate_partitions(4)) {
            Partition nut = nu.conjugate();
            std::map<long, long> expect;
            for (int i = 1; i <= mu.length(); ++i)
                for (int j = 1; j <= mu.part(i); ++j) expect[mu.arm(i, j) + nut.leg(i, j) + 1]++;
            for (int i = 1; i <= nut.length(); ++i)
                for (int j = 1; j <= nut.part(i); ++j) expect[-(nut.arm(i, j) + mu.leg(i, j) + 1)]++;
            CHECK(c_table(mu, nu).coeffs() == expect);
        }
    }
}
