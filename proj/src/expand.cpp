#include "topvertex/expand.hpp"

#include <sstream>
#include <stdexcept>

namespace topvertex {

namespace {

// sum_e c_e * exp(e*u/2) truncated at u^K, as a dense coefficient vector.
std::vector<Rat> substitute_exp(const LaurentPoly& p, long K) {
    std::vector<Rat> out(size_t(K + 1), Rat(0));
    if (p.is_zero()) return out;
    for (long e = p.val(); e <= p.deg(); ++e) {
        Rat c = p.coeff(e);
        if (c == 0) continue;
        Rat term(c);
        Rat half(e, 2);
        out[0] += term;
        for (long n = 1; n <= K; ++n) {
            term *= half;
            term /= n;
            out[size_t(n)] += term;
        }
    }
    return out;
}

}  // namespace

ULaurent expand_at_unity(const QRational& f, long order) {
    ULaurent out;
    out.order = order;
    if (f.is_zero()) return out;
    // Working order must cover the denominator's vanishing order at u = 0,
    // which is at most its degree span.
    long span = f.den().deg() - f.den().val();
    long K = order + span + 1;
    if (K < 1) K = 1;
    std::vector<Rat> num = substitute_exp(f.num(), K);
    std::vector<Rat> den = substitute_exp(f.den(), K);
    long vd = -1;
    for (long i = 0; i <= K; ++i)
        if (den[size_t(i)] != 0) {
            vd = i;
            break;
        }
    if (vd < 0) throw std::domain_error("insufficient expansion order");
    long vn = -1;
    for (long i = 0; i <= K; ++i)
        if (num[size_t(i)] != 0) {
            vn = i;
            break;
        }
    if (vn < 0) vn = K + 1;  // numerator vanishes to working order: result 0
    // divide u^{-vd}*den into u^{-vn}*num, both now with nonzero constants
    long nout = order - (vn - vd) + 1;
    out.val = vn - vd;
    if (nout <= 0) return out;
    std::vector<Rat> q(size_t(nout), Rat(0));
    const Rat d0 = den[size_t(vd)];
    for (long n = 0; n < nout; ++n) {
        Rat acc = (vn + n <= K) ? num[size_t(vn + n)] : Rat(0);
        for (long k = 0; k < n; ++k) {
            long di = vd + n - k;
            if (di <= K) acc -= q[size_t(k)] * den[size_t(di)];
        }
        q[size_t(n)] = acc / d0;
    }
    out.coeffs = std::move(q);
    return out;
}

std::string ULaurent::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        long e = val + long(i);
        const Rat& c = coeffs[i];
        Rat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0)
            os << a;
        else {
            if (a != 1) os << a << "*";
            os << "u";
            if (e != 1) os << "^" << e;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace topvertex
