#pragma once

#include <map>
#include <string>
#include <vector>

#include "topvertex/rational.hpp"

namespace topvertex {

/// Integer partition: weakly decreasing positive parts; empty = the zero
/// partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& s);  // "[3,1,1]" or "3,1,1" or "[]"

    const std::vector<int>& parts() const { return parts_; }
    long size() const;                       // |mu|
    int length() const { return int(parts_.size()); }
    int part(int i) const;                   // 1-based, 0 beyond the length
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool contains(const Partition& inner) const;  // inner subset of *this
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    /// Arm and leg lengths of a 1-based cell (i,j) inside the diagram.
    int arm(int i, int j) const { return part(i) - j; }
    int leg(int i, int j) const { return conjugate().part(j) - i; }

    std::string str() const;  // "[3,1,1]", "[]" for the empty partition

private:
    std::vector<int> parts_;
};

/// kappa(mu) = |mu| + sum_j mu_j (mu_j - 2j); always even.
long kappa(const Partition& mu);

/// All partitions with |mu| <= max_size, sizes ascending and
/// reverse-lexicographic within each size.
std::vector<Partition> enumerate_partitions(long max_size);
/// All partitions of exactly n, reverse-lexicographic.
std::vector<Partition> partitions_of(long n);

/// Relative hook h_{mu,nu}(i,j) = mu_i - i + nu_j - j + 1 (1-based).
long hook_exponent(const Partition& mu, const Partition& nu, int i, int j);

/// f_mu(q) = q/(q-1) * sum_{i>=1} (q^{mu_i - i} - q^{-i}); a Laurent
/// polynomial in q.
QRational f_mu(const Partition& mu);

/// Expansion coefficients of the Laurent polynomial
/// f_{mu,nu} = (q - 2 + q^{-1}) f_mu f_nu + f_mu + f_nu.
/// All values are nonnegative integers with
///   sum_k C_k = |mu| + |nu|   and   sum_k k C_k = (kappa(mu)+kappa(nu))/2.
class CkTable {
public:
    CkTable() = default;
    explicit CkTable(std::map<long, long> coeffs);
    const std::map<long, long>& coeffs() const { return coeffs_; }
    long total() const;           // sum_k C_k
    long weighted_total() const;  // sum_k k*C_k

private:
    std::map<long, long> coeffs_;
};

CkTable c_table(const Partition& mu, const Partition& nu);

}  // namespace topvertex
