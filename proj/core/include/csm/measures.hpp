#pragma once

#include "csm/density_matrix.hpp"

namespace csm {

// Two-qubit concurrence max{0, sqrt(l1)-sqrt(l2)-sqrt(l3)-sqrt(l4)} where
// the l_i are the eigenvalues of rho (sy x sy) rho* (sy x sy) in
// decreasing order. Requires dim 4. Basis order {uu, ud, du, dd}.
double concurrence(const DensityMatrix& rho);

// S(diag(rho)) - S(rho), natural logarithm.
double relative_entropy_of_coherence(const DensityMatrix& rho);

// -Tr(rho ln rho), natural logarithm; eigenvalues <= 0 contribute 0.
// Eigenvalues below -1e-6 signal an invalid state and throw.
double von_neumann_entropy(const DensityMatrix& rho);

// Tr(rho^2).
double purity(const DensityMatrix& rho);

}  // namespace csm
