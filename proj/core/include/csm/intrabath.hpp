#pragma once

#include "csm/density_matrix.hpp"
#include "csm/measures.hpp"

namespace csm {

// Reduced state of one representative pair of bath spins, basis
// {++, +-, -+, --} with + meaning up. Permutation symmetry makes all
// pairs identical, so a single pair characterizes the intrabath
// correlations.
struct PairDensity {
    DensityMatrix chi;

    // The independent parameters of the symmetric form:
    // diag (p1, p2, p2, 1 - p1 - 2 p2), the +-/-+ exchange element p2,
    // one-step coherences p3 (upper) and p5 (lower), two-step coherence p4.
    double p1 = 0.0, p2 = 0.0;
    std::complex<double> p3, p4, p5;
};

// Contract an (N+1)x(N+1) bath density matrix in the symmetric basis
// (index = down-flip count) onto one pair of bath spins.
PairDensity pair_density(const DensityMatrix& rho_bath);

// C(chi_t) / C(chi_0). Throws std::domain_error when C(chi_0) vanishes.
double reduced_concurrence(const PairDensity& chi_t, const PairDensity& chi_0);

}  // namespace csm
