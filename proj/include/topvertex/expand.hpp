#pragma once

#include <string>
#include <vector>

#include "topvertex/rational.hpp"

namespace topvertex {

/// Truncated Laurent series in u, with q = e^{sqrt(-1) g_s} realized as the
/// substitution t = e^{u/2}.  Coefficients are exact rationals.
struct ULaurent {
    long val = 0;               // exponent of the first stored coefficient
    std::vector<Rat> coeffs;    // coefficient of u^{val+i}
    long order = 0;             // coefficients are valid up to u^order

    Rat coeff(long e) const {
        if (e < val || e - val >= long(coeffs.size())) return Rat(0);
        return coeffs[size_t(e - val)];
    }
    std::string str() const;
};

/// Laurent expansion of f around t = 1 via t = e^{u/2}, up to u^order.
/// Substitutes truncated exponential series into numerator and denominator
/// and divides, tracking the pole order.  Throws if the denominator vanishes
/// identically to the requested working order.
ULaurent expand_at_unity(const QRational& f, long order);

}  // namespace topvertex
