#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "topvertex/rational.hpp"

namespace topvertex {

using Exp = std::vector<int>;  // exponent vector, one entry per variable

/// Truncation region: a downward-closed set of exponent vectors given by a
/// weighted total-degree cap together with optional per-variable caps.
/// Products of retained terms that land inside the region are always exact,
/// so truncated multiplication never produces a wrong coefficient below cap.
struct Truncation {
    std::vector<int> weights;   // one per variable, >= 0
    long cap = 0;               // weighted total degree cap
    std::vector<long> var_caps; // empty means unbounded per-variable

    bool admits(const Exp& e) const {
        long w = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            w += long(weights[i]) * e[i];
            if (!var_caps.empty() && e[i] > var_caps[i]) return false;
        }
        return w <= cap;
    }
};

/// Shared variable context for a family of series.
struct SeriesContext {
    std::vector<std::string> names;
    Truncation trunc;

    static std::shared_ptr<const SeriesContext> make(std::vector<std::string> names, long cap);
    static std::shared_ptr<const SeriesContext> make(std::vector<std::string> names, Truncation t);
    int index_of(const std::string& name) const;
};

using Ctx = std::shared_ptr<const SeriesContext>;

/// Truncated multivariate power series in the Kaehler variables with
/// QRational coefficients.  All exponents are >= 0 and inside the context's
/// truncation region.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(Ctx ctx) : ctx_(std::move(ctx)) {}
    QSeries(Ctx ctx, const QRational& c);

    static QSeries one(Ctx ctx) { return QSeries(std::move(ctx), QRational(1)); }
    static QSeries variable(Ctx ctx, int var);
    static QSeries monomial(Ctx ctx, const QRational& c, const Exp& e);

    const Ctx& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, QRational>& terms() const { return terms_; }
    QRational coeff(const Exp& e) const;
    QRational constant_term() const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
    bool operator==(const QSeries&) const = default;

    QSeries& scale(const QRational& c);
    /// Multiply by c * prod(var_i^{e_i}); terms leaving the region are dropped.
    QSeries& mul_monomial(const QRational& c, const Exp& e);
    QSeries pow(long n) const;

    /// Reciprocal; requires an invertible constant term.
    QSeries inverse() const;
    /// Formal logarithm; requires constant term 1.
    QSeries log() const;
    /// Formal exponential; requires constant term 0.
    QSeries exp() const;

    /// Set the listed variables to zero.
    QSeries slice_zero(const std::vector<int>& vars) const;
    /// Re-truncate into another context with the same variables.
    QSeries retruncate(Ctx ctx) const;

    void add_term(const Exp& e, const QRational& c);
    std::string str() const;

private:
    Ctx ctx_;
    std::map<Exp, QRational> terms_;
    void check_same(const QSeries& o) const;
};

}  // namespace topvertex
