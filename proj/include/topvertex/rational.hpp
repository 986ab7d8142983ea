#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace topvertex {

using Rat = mpq_class;

/// Laurent polynomial in the half-power variable t = q^{1/2}, with
/// arbitrary-precision rational coefficients.  The convention q^a -> t^{2a}
/// turns every half-integer q-power of the theory into an integer t-power.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero
    LaurentPoly(long c);
    LaurentPoly(const Rat& c);
    static LaurentPoly monomial(const Rat& c, long e);

    bool is_zero() const { return coeffs_.empty(); }
    /// Lowest exponent with nonzero coefficient (0 for the zero polynomial).
    long val() const { return val_; }
    /// Highest exponent with nonzero coefficient (0 for the zero polynomial).
    long deg() const { return coeffs_.empty() ? 0 : val_ + long(coeffs_.size()) - 1; }
    Rat coeff(long e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    bool operator==(const LaurentPoly&) const = default;

    /// Exact evaluation at a nonzero rational point.
    Rat eval(const Rat& t0) const;
    /// The substitution t -> t^{-1}.
    LaurentPoly reversed() const;
    /// Multiply by t^e.
    LaurentPoly shifted(long e) const;

    std::string str(const std::string& var = "t") const;

    /// Raw coefficient access, lowest exponent first.
    const std::vector<Rat>& raw() const { return coeffs_; }

private:
    long val_ = 0;
    std::vector<Rat> coeffs_;  // coeffs_[i] is the coefficient of t^{val_+i}
    void normalize();
    friend LaurentPoly poly_gcd(const LaurentPoly&, const LaurentPoly&);
    friend void poly_divmod(const LaurentPoly&, const LaurentPoly&, LaurentPoly&, LaurentPoly&);
};

/// Monic gcd (t-valuations ignored; result has valuation 0).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
/// Exact division; aborts if the division is not exact.
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

/// Rational function in t = q^{1/2} over the rationals, kept in canonical
/// form: numerator and denominator coprime, denominator an ordinary
/// polynomial (valuation zero) with primitive integer coefficients and a
/// positive leading coefficient.  Equality of values is equality of
/// representations.
class QRational {
public:
    QRational() : num_(), den_(Rat(1)) {}
    QRational(long c) : num_(c), den_(Rat(1)) {}
    QRational(const Rat& c) : num_(c), den_(Rat(1)) {}
    QRational(const LaurentPoly& p) : num_(p), den_(Rat(1)) {}
    QRational(LaurentPoly num, LaurentPoly den);

    static QRational t_power(long e) { return QRational(LaurentPoly::monomial(1, e)); }
    /// q^a as t^{2a}.
    static QRational q_power(long a) { return t_power(2 * a); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    QRational operator-() const;
    QRational& operator+=(const QRational& o);
    QRational& operator-=(const QRational& o);
    QRational& operator*=(const QRational& o);
    QRational& operator/=(const QRational& o);
    friend QRational operator+(QRational a, const QRational& b) { return a += b; }
    friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
    friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
    friend QRational operator/(QRational a, const QRational& b) { return a /= b; }
    bool operator==(const QRational&) const = default;

    /// Integer powers, negative allowed for nonzero values.
    QRational pow(long n) const;

    /// Exact evaluation; nullopt if t0 is a pole (or t0 = 0 hits a negative
    /// valuation).
    std::optional<Rat> eval(const Rat& t0) const;
    /// The substitution t -> t^{-1}.
    QRational reversed() const;

    /// True if the value is a Laurent polynomial (unit denominator).
    bool is_laurent() const;
    LaurentPoly as_laurent() const;
    /// True if the value is a constant, returned through *c.
    bool is_constant(Rat* c = nullptr) const;

    std::string str() const;

private:
    LaurentPoly num_, den_;
    void canonicalize();
};

/// Closed form of the geometric tail sum_{n>=0} q^{first + n*step} with
/// step < 0, as t^{2*first} / (1 - t^{2*step}).  `first2` and `step2` are
/// twice the q-exponents, i.e. t-exponents, so half-integer q-powers are
/// exact.  Aborts on step2 >= 0 ("non-summable tail").
QRational geometric_tail_t(long first2, long step2);

}  // namespace topvertex
