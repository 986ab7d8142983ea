#pragma once

#include <memory>
#include <string>
#include <vector>

#include "topvertex/partition.hpp"
#include "topvertex/series.hpp"

namespace topvertex {

/// A monomial scale: QRational coefficient (carrying t-powers and signs)
/// times a monomial in the series variables of the ambient context.
struct ScaleMonomial {
    QRational coeff = QRational(1);
    Exp exps;  // one entry per context variable; empty means no variables
};

/// Specialized symmetric-function alphabet.  principal(nu) is the infinite
/// list x_i = q^{nu_i - i + 1/2}; inverted flips t -> t^{-1} (the alphabet
/// q^{-nu-rho}).  finite keeps only the first n variables.  scaled
/// multiplies every variable by a monomial; joined concatenates alphabets.
class Alphabet {
public:
    static Alphabet principal(Partition nu, bool inverted = false);
    static Alphabet principal_finite(Partition nu, int nvars, bool inverted = false);
    static Alphabet scaled(Alphabet base, ScaleMonomial m);
    static Alphabet joined(std::vector<Alphabet> parts);

    /// Power sum p_r of the alphabet, in closed form (geometric tails for the
    /// infinite principal case).
    QSeries power_sum(long r, const Ctx& ctx) const;

    /// Structural key for memoization.
    const std::string& fingerprint() const { return fp_; }

private:
    enum class Kind { Principal, Scaled, Joined };
    Kind kind_ = Kind::Principal;
    Partition nu_;
    bool inverted_ = false;
    int nvars_ = -1;  // -1 = infinite
    std::shared_ptr<const Alphabet> base_;
    ScaleMonomial scale_;
    std::vector<Alphabet> parts_;
    std::string fp_;
    void make_fp();
};

/// Complete homogeneous value h_r(a) via Newton's identities; cached per
/// (alphabet, context).
QSeries complete_homogeneous(const Alphabet& a, long r, const Ctx& ctx);

/// Skew Schur function s_{lambda/mu}(a) via the Jacobi-Trudi determinant
/// det(h_{lambda_i - mu_j - i + j}).  Zero unless mu is contained in lambda.
QSeries skew_schur(const Partition& lambda, const Partition& mu, const Alphabet& a, const Ctx& ctx);

/// Scalar (variable-free) context shared by purely rational computations.
const Ctx& scalar_ctx();
/// Scalar-valued skew Schur at a variable-free alphabet.
QRational skew_schur_scalar(const Partition& lambda, const Partition& mu, const Alphabet& a);

}  // namespace topvertex
