#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "topvertex/schur.hpp"
#include "topvertex/vertex.hpp"

using namespace topvertex;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

QRational t_pow(long e) { return QRational::t_power(e); }

// Exact tableau-expansion oracle for finite alphabets: sum over semistandard
// tableaux of shape lambda/mu with entries in 1..n, x_k = t^{2(nu_k - k) + 1}
// (negated exponents when inverted).  Independent of the Newton/Jacobi-Trudi
// path.
QRational tableau_skew(const Partition& lambda, const Partition& mu, const Partition& nu, int n,
                       bool inverted = false) {
    if (!lambda.contains(mu)) return QRational(0);
    std::vector<QRational> x;
    for (int k = 1; k <= n; ++k) {
        long e = 2 * long(nu.part(k) - k) + 1;
        x.push_back(t_pow(inverted ? -e : e));
    }
    int rows = lambda.length();
    auto fill = std::vector<std::vector<int>>(size_t(rows));
    for (int i = 0; i < rows; ++i) fill[size_t(i)].assign(size_t(lambda.part(i + 1)), 0);
    QRational total(0);
    // cells in row-major order, skipping the mu part
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= rows; ++i)
        for (int j = mu.part(i) + 1; j <= lambda.part(i); ++j) cells.emplace_back(i, j);
    auto rec = [&](auto&& self, size_t idx, QRational weight) -> void {
        if (idx == cells.size()) {
            total += weight;
            return;
        }
        auto [i, j] = cells[idx];
        int lo = 1;
        if (j - 1 >= 1 && j - 1 > mu.part(i)) lo = std::max(lo, fill[size_t(i - 1)][size_t(j - 2)]);
        if (i - 1 >= 1 && j > mu.part(i - 1) && j <= lambda.part(i - 1))
            lo = std::max(lo, fill[size_t(i - 2)][size_t(j - 1)] + 1);
        for (int v = lo; v <= n; ++v) {
            fill[size_t(i - 1)][size_t(j - 1)] = v;
            self(self, idx + 1, weight * x[size_t(v - 1)]);
        }
        fill[size_t(i - 1)][size_t(j - 1)] = 0;
    };
    rec(rec, 0, QRational(1));
    return total;
}

}  // namespace

TEST_CASE("power sums of principal alphabets") {
    auto p = [](const Alphabet& a, long r) {
        return a.power_sum(r, scalar_ctx()).coeff(Exp{});
    };
    CHECK(p(Alphabet::principal(P({})), 1) == QRational(1) / (t_pow(1) - t_pow(-1)));
    CHECK(p(Alphabet::principal(P({1})), 1) ==
          t_pow(1) + t_pow(-3) / (QRational(1) - t_pow(-2)));
    // scaled by a series variable Q: p_2 = Q^2 / (t^2 - t^{-2})
    Ctx ctx = SeriesContext::make({"Q"}, 4);
    ScaleMonomial m;
    m.exps = {1};
    QSeries p2 = Alphabet::scaled(Alphabet::principal(P({})), m).power_sum(2, ctx);
    CHECK(p2.coeff({2}) == QRational(1) / (t_pow(2) - t_pow(-2)));
    CHECK(p2.coeff({0}).is_zero());
}

TEST_CASE("power sums: closed form equals finite part plus tail at a point") {
    // p_r(principal(nu)) - p_r(first N vars) == exact geometric remainder
    for (const auto& nu : {P({}), P({2, 1}), P({3, 3, 1})}) {
        for (long r = 1; r <= 3; ++r) {
            QRational closed = Alphabet::principal(nu).power_sum(r, scalar_ctx()).coeff(Exp{});
            int N = 7;
            QRational finite = Alphabet::principal_finite(nu, N).power_sum(r, scalar_ctx()).coeff(Exp{});
            // remainder: sum_{i > N} t^{r(-2i+1)}
            QRational rem = geometric_tail_t(r * (-2L * (N + 1) + 1), -2 * r);
            CHECK(closed == finite + rem);
        }
    }
}

TEST_CASE("skew schur basics") {
    CHECK(skew_schur_scalar(P({}), P({}), Alphabet::principal(P({}))) == QRational(1));
    CHECK(skew_schur_scalar(P({1}), P({}), Alphabet::principal(P({}))) ==
          QRational(1) / (t_pow(1) - t_pow(-1)));
    CHECK(skew_schur_scalar(P({2, 1}), P({2, 1}), Alphabet::principal(P({1}))) == QRational(1));
    // vanishing outside containment
    CHECK(skew_schur_scalar(P({1}), P({2}), Alphabet::principal(P({}))).is_zero());
    CHECK(skew_schur_scalar(P({2, 2}), P({3}), Alphabet::principal(P({1}))).is_zero());
}

TEST_CASE("jacobi-trudi equals tableau expansion on finite alphabets") {
    auto shapes = enumerate_partitions(4);
    for (const auto& lambda : shapes) {
        for (const auto& mu : enumerate_partitions(2)) {
            if (!lambda.contains(mu)) continue;
            for (const auto& nu : {P({}), P({2, 1})}) {
                for (int n : {1, 2, 3}) {
                    QRational jt = skew_schur_scalar(lambda, mu, Alphabet::principal_finite(nu, n));
                    QRational tab = tableau_skew(lambda, mu, nu, n);
                    CHECK(jt == tab);
                }
            }
        }
    }
}

TEST_CASE("homogeneity under monomial scaling") {
    Ctx ctx = SeriesContext::make({"Q"}, 5);
    ScaleMonomial m;
    m.exps = {1};
    for (const auto& lambda : enumerate_partitions(4)) {
        for (const auto& mu : enumerate_partitions(2)) {
            if (!lambda.contains(mu)) continue;
            QSeries scaled = skew_schur(lambda, mu, Alphabet::scaled(Alphabet::principal(P({1})), m), ctx);
            QRational plain = skew_schur_scalar(lambda, mu, Alphabet::principal(P({1})));
            long d = lambda.size() - mu.size();
            for (const auto& [e, c] : scaled.terms()) CHECK(e[0] == d);
            Exp at{int(d)};
            CHECK(scaled.coeff(at) == plain);
        }
    }
}

TEST_CASE("conjugation symmetry s_{l/m}(q^{nu+rho}) = (-1)^{|l|-|m|} s_{lt/mt}(q^{-nut-rho})") {
    for (const auto& lambda : enumerate_partitions(3)) {
        for (const auto& mu : enumerate_partitions(2)) {
            if (!lambda.contains(mu)) continue;
            for (const auto& nu : enumerate_partitions(3)) {
                QRational lhs = skew_schur_scalar(lambda, mu, Alphabet::principal(nu));
                QRational rhs = skew_schur_scalar(lambda.conjugate(), mu.conjugate(),
                                                  Alphabet::principal(nu.conjugate(), true));
                long d = lambda.size() - mu.size();
                if (d % 2 != 0) rhs = -rhs;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("branching: joined alphabet equals sum over intermediate partitions") {
    Ctx ctx = SeriesContext::make({"Q"}, 6);
    ScaleMonomial m;
    m.exps = {1};
    Alphabet x = Alphabet::principal(P({1}));
    Alphabet y = Alphabet::scaled(Alphabet::principal(P({})), m);
    Alphabet xy = Alphabet::joined({x, y});
    for (const auto& lambda : enumerate_partitions(3)) {
        for (const auto& nu : enumerate_partitions(2)) {
            if (!lambda.contains(nu)) continue;
            QSeries direct = skew_schur(lambda, nu, xy, ctx);
            QSeries sum(ctx);
            for (const auto& xi : enumerate_partitions(lambda.size())) {
                if (!lambda.contains(xi) || !xi.contains(nu)) continue;
                sum += skew_schur(lambda, xi, x, ctx) * skew_schur(xi, nu, y, ctx);
            }
            CHECK(direct == sum);
        }
    }
}

TEST_CASE("vertex base values") {
    CHECK(vertex(P({}), P({}), P({})) == QRational(1));
    QRational s1 = QRational(1) / (t_pow(1) - t_pow(-1));
    CHECK(vertex(P({1}), P({}), P({})) == s1);
    CHECK(vertex(P({}), P({}), P({1})) == s1);
    CHECK(vertex(P({}), P({1}), P({})) == s1);
}

TEST_CASE("vertex reduces to principal schur on one leg") {
    for (const auto& mu : enumerate_partitions(4)) {
        CHECK(vertex(mu, P({}), P({})) == schur_principal(mu));
    }
}

TEST_CASE("vertex cyclic symmetry") {
    auto all3 = enumerate_partitions(3);
    for (const auto& a : all3)
        for (const auto& b : all3)
            for (const auto& c : all3) {
                QRational v = vertex(a, b, c);
                CHECK(v == vertex(b, c, a));
            }
}

TEST_CASE("vertex numeric oracle: interval containment of truncated tableau sum") {
    // Exact rational interval arithmetic; evaluation points |t0| > 1 so the
    // principal tails converge.
    struct IVal {
        Rat lo, hi;
        IVal(const Rat& c) : lo(c), hi(c) {}
        IVal(const Rat& l, const Rat& h) : lo(l), hi(h) {}
        IVal operator*(const IVal& o) const {
            Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
            Rat mn = std::min(std::min(a, b), std::min(c, d));
            Rat mx = std::max(std::max(a, b), std::max(c, d));
            return IVal(mn, mx);
        }
        IVal operator+(const IVal& o) const { return IVal(lo + o.lo, hi + o.hi); }
        bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    };

    const int N = 40;
    auto skew_interval = [&](const Partition& lambda, const Partition& mu, const Partition& nu,
                             const Rat& t0) -> IVal {
        // center: exact truncated tableau sum
        QRational trunc = tableau_skew(lambda, mu, nu, N);
        Rat center = *trunc.eval(t0);
        // tail bound: k * T_N * S^{k-1} with S = sum_i x_i, T_N = sum_{i>N} x_i
        long k = lambda.size() - mu.size();
        if (k == 0) return IVal(center);
        int l = nu.length();
        Rat S(0);
        auto xval = [&](int i) {
            QRational x = QRational::t_power(2 * long(nu.part(i) - i) + 1);
            return *x.eval(t0);
        };
        for (int i = 1; i <= l; ++i) S += xval(i);
        // sum_{i>l} t0^{-2i+1} = t0^{-2l-1}/(1 - t0^{-2})
        QRational tail_from = geometric_tail_t(-2L * l - 1, -2);
        S += *tail_from.eval(t0);
        QRational tailN = geometric_tail_t(-2L * (N + 1) + 1, -2);
        Rat T = *tailN.eval(t0);
        Rat bound = T;
        for (long c = 1; c < k; ++c) bound *= S;
        bound *= k;
        return IVal(center - bound, center + bound);
    };

    std::vector<Rat> points = {Rat(2), Rat(3), Rat(5, 2)};
    auto all2 = enumerate_partitions(2);
    for (const auto& l1 : all2)
        for (const auto& l2 : all2)
            for (const auto& l3 : all2) {
                QRational v = vertex(l1, l2, l3);
                for (const Rat& t0 : points) {
                    auto ve = v.eval(t0);
                    REQUIRE(ve.has_value());
                    // assemble the truncated-alphabet vertex as an interval
                    IVal acc(Rat(0));
                    Partition l2t = l2.conjugate(), l3t = l3.conjugate();
                    for (const auto& mu : enumerate_partitions(std::min(l1.size(), l3t.size()))) {
                        if (!l1.contains(mu) || !l3t.contains(mu)) continue;
                        acc = acc + skew_interval(l1, mu, l2t, t0) * skew_interval(l3t, mu, l2, t0);
                    }
                    IVal pref = skew_interval(l2, Partition(), Partition(), t0);
                    Rat tk = *QRational::t_power(kappa(l3)).eval(t0);
                    IVal total = pref * acc * IVal(tk);
                    CHECK(total.contains(*ve));
                }
            }
}
