#pragma once

#include "ekr/matrix.hpp"
#include "ekr/partition.hpp"
#include "ekr/spectra.hpp"

namespace ekr {

// Explicit construction only exists for the brute-force oracles.
inline constexpr int kExplicitCap = 6;

// The 0/1 class-sum operator A_rho on all n! permutations:
// A_rho[g,h] = 1 iff h g^{-1} has cycle type rho. Rows/cols follow the
// lexicographic vertex order of perms.hpp.
RatMatrix class_operator(int n, const Partition& rho);

// Weighted operator assembled from class_operator summands.
RatMatrix assemble_operator(const WeightedClassSum& w);

// P_lambda = (d_lambda / n!) E_lambda with E_lambda[g,h] = chi^lambda(hg^{-1});
// symmetric idempotent projection onto the lambda-isotypic module.
RatMatrix projector(int n, const Partition& lambda);

// E_lambda itself (unscaled), for eigenvector identities.
RatMatrix module_operator(int n, const Partition& lambda);

}  // namespace ekr
