#pragma once

#include "topvertex/partition.hpp"
#include "topvertex/schur.hpp"

namespace topvertex {

/// The topological vertex
///   C_{l1,l2,l3}(q) = q^{kappa(l3)/2} s_{l2}(q^rho)
///                     sum_mu s_{l1/mu}(q^{l2^t+rho}) s_{l3^t/mu}(q^{l2+rho}),
/// with the internal sum running over mu contained in both l1 and l3^t.
/// Memoized; values are exact rational functions in t = q^{1/2}.
QRational vertex(const Partition& l1, const Partition& l2, const Partition& l3);

/// s_mu(q^rho) as a convenience wrapper.
QRational schur_principal(const Partition& mu);

}  // namespace topvertex
