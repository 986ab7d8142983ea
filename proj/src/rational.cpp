#include "topvertex/rational.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace topvertex {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) coeffs_.assign(1, Rat(c));
}

LaurentPoly::LaurentPoly(const Rat& c) {
    if (c != 0) coeffs_.assign(1, c);
}

LaurentPoly LaurentPoly::monomial(const Rat& c, long e) {
    LaurentPoly p;
    if (c != 0) {
        p.val_ = e;
        p.coeffs_.assign(1, c);
    }
    return p;
}

void LaurentPoly::normalize() {
    size_t lo = 0, hi = coeffs_.size();
    while (hi > lo && coeffs_[hi - 1] == 0) --hi;
    while (lo < hi && coeffs_[lo] == 0) ++lo;
    if (lo == hi) {
        coeffs_.clear();
        val_ = 0;
        return;
    }
    if (lo > 0 || hi < coeffs_.size()) {
        std::vector<Rat> out(coeffs_.begin() + lo, coeffs_.begin() + hi);
        coeffs_.swap(out);
        val_ += long(lo);
    }
}

Rat LaurentPoly::coeff(long e) const {
    if (coeffs_.empty() || e < val_ || e > deg()) return Rat(0);
    return coeffs_[size_t(e - val_)];
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long lo = std::min(val_, o.val_);
    long hi = std::max(deg(), o.deg());
    std::vector<Rat> out(size_t(hi - lo + 1), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[size_t(val_ - lo) + i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[size_t(o.val_ - lo) + i] += o.coeffs_[i];
    val_ = lo;
    coeffs_.swap(out);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        val_ = 0;
        return *this;
    }
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    val_ += o.val_;
    coeffs_.swap(out);
    normalize();
    return *this;
}

Rat LaurentPoly::eval(const Rat& t0) const {
    if (is_zero()) return Rat(0);
    if (t0 == 0) throw std::domain_error("LaurentPoly::eval at t = 0");
    // Horner on the ordinary part, then multiply by t0^val.
    Rat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t0 + coeffs_[i];
    Rat tp(1);
    long v = val_;
    Rat base = v >= 0 ? t0 : Rat(1) / t0;
    for (long k = 0; k < (v >= 0 ? v : -v); ++k) tp *= base;
    return acc * tp;
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly p;
    if (is_zero()) return p;
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    p.val_ = -deg();
    return p;
}

LaurentPoly LaurentPoly::shifted(long e) const {
    LaurentPoly p(*this);
    if (!p.is_zero()) p.val_ += e;
    return p;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        long e = val_ + long(i);
        Rat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (e == 0) {
            os << a;
        } else {
            if (!unit) os << a << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

// --- division / gcd on ordinary parts -------------------------------------

// Divides a by b (b nonzero), both treated as ordinary polynomials after
// dropping t-valuations; q and r satisfy a = q*b + r with deg r < deg b.
void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r) {
    assert(!b.is_zero());
    std::vector<Rat> rem = a.coeffs_;
    const std::vector<Rat>& d = b.coeffs_;
    long db = long(d.size()) - 1;
    std::vector<Rat> quo;
    if (long(rem.size()) - 1 >= db) quo.assign(rem.size() - d.size() + 1, Rat(0));
    const Rat& lead = d.back();
    for (long k = long(rem.size()) - 1 - db; k >= 0; --k) {
        Rat f = rem[size_t(k + db)] / lead;
        if (f != 0) {
            quo[size_t(k)] = f;
            for (long j = 0; j <= db; ++j) rem[size_t(k + j)] -= f * d[size_t(j)];
        }
    }
    q = LaurentPoly();
    q.coeffs_ = std::move(quo);
    q.normalize();
    r = LaurentPoly();
    r.coeffs_ = std::move(rem);
    r.normalize();
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r0 = a.shifted(-a.val());
    LaurentPoly r1 = b.shifted(-b.val());
    if (r0.is_zero()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        LaurentPoly q, r;
        poly_divmod(r0, r1, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        if (!r1.is_zero()) {
            r1 = r1.shifted(-r1.val());
            // monic remainders keep coefficient growth in check
            Rat lead = r1.raw().back();
            LaurentPoly m = LaurentPoly(Rat(1) / lead);
            r1 *= m;
        }
    }
    if (r0.is_zero()) return LaurentPoly(Rat(1));
    Rat lead = r0.raw().back();
    return r0 * LaurentPoly(Rat(1) / lead);
}

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return LaurentPoly();
    LaurentPoly q, r;
    poly_divmod(a.shifted(-a.val()), b.shifted(-b.val()), q, r);
    assert(r.is_zero() && "poly_divexact: division not exact");
    return q.shifted(a.val() - b.val());
}

// --- QRational --------------------------------------------------------------

QRational::QRational(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QRational: zero denominator");
    canonicalize();
}

void QRational::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rat(1));
        return;
    }
    long shift = num_.val() - den_.val();
    num_ = num_.shifted(-num_.val());
    den_ = den_.shifted(-den_.val());
    LaurentPoly g = poly_gcd(num_, den_);
    if (g.deg() > 0) {
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
    }
    // scale so the denominator is integer-primitive with positive lead
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const Rat& c : den_.raw()) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (den_.raw().back() < 0) scale = -scale;
    if (scale != 1) {
        LaurentPoly m{scale};
        num_ *= m;
        den_ *= m;
    }
    num_ = num_.shifted(shift);
}

bool QRational::is_one() const {
    return den_.deg() == 0 && !den_.is_zero() && num_ == den_;
}

QRational QRational::operator-() const {
    QRational r(*this);
    r.num_ = -r.num_;
    return r;
}

QRational& QRational::operator+=(const QRational& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        canonicalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

QRational& QRational::operator-=(const QRational& o) { return *this += -o; }

QRational& QRational::operator*=(const QRational& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly(Rat(1));
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

QRational& QRational::operator/=(const QRational& o) {
    if (o.is_zero()) throw std::domain_error("QRational: division by zero");
    if (is_zero()) return *this;
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

QRational QRational::pow(long n) const {
    if (n == 0) return QRational(1);
    QRational base = *this;
    if (n < 0) {
        if (is_zero()) throw std::domain_error("QRational: negative power of zero");
        base = QRational(den_, num_);
        n = -n;
    }
    QRational acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::optional<Rat> QRational::eval(const Rat& t0) const {
    if (t0 == 0) {
        if (num_.val() < 0) return std::nullopt;
        return num_.coeff(0) / den_.coeff(0);
    }
    Rat d = den_.eval(t0);
    if (d == 0) return std::nullopt;
    return num_.eval(t0) / d;
}

QRational QRational::reversed() const { return QRational(num_.reversed(), den_.reversed()); }

bool QRational::is_laurent() const { return den_.deg() == 0; }

LaurentPoly QRational::as_laurent() const {
    if (!is_laurent()) throw std::domain_error("QRational: not a Laurent polynomial: " + str());
    Rat d = den_.coeff(0);
    return num_ * LaurentPoly(Rat(1) / d);
}

bool QRational::is_constant(Rat* c) const {
    if (is_zero()) {
        if (c) *c = 0;
        return true;
    }
    if (den_.deg() == 0 && num_.deg() == 0 && num_.val() == 0) {
        if (c) *c = num_.coeff(0) / den_.coeff(0);
        return true;
    }
    return false;
}

std::string QRational::str() const {
    if (is_laurent()) return as_laurent().str();
    std::string n = num_.str(), d = den_.str();
    return "(" + n + ")/(" + d + ")";
}

QRational geometric_tail_t(long first2, long step2) {
    if (step2 >= 0) throw std::domain_error("non-summable tail");
    // sum_{n>=0} t^{first2 + n*step2} = t^{first2} / (1 - t^{step2})
    LaurentPoly den = LaurentPoly(Rat(1)) - LaurentPoly::monomial(1, step2);
    return QRational(LaurentPoly::monomial(1, first2), den);
}

}  // namespace topvertex
