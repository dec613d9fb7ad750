#pragma once

#include <array>
#include <complex>
#include <vector>

#include "csm/density_matrix.hpp"
#include "csm/dicke.hpp"

namespace csm {

// Two central qubits sharing one bath. J, Jp couple the qubits
// (transverse flip-flop and longitudinal); g1, g2 and g1p, g2p are the
// transverse and longitudinal qubit-bath couplings.
struct TwoQubitParams {
    double omega1 = 1.0, omega2 = 1.0;
    double J = 0.0, Jp = 0.0;
    double g1 = 1.0, g2 = 1.0;
    double g1p = 0.0, g2p = 0.0;
    int n_spins = 0;
};

// Central-pair amplitudes, basis order {uu, ud, du, dd}.
struct TwoQubitState {
    std::array<std::complex<double>, 4> amp{1.0, 0.0, 0.0, 0.0};

    static TwoQubitState basis(int index);
    static TwoQubitState bell_psi_plus();
    static TwoQubitState validated(const std::array<std::complex<double>, 4>& amp);
};

enum class Picture { interaction, schrodinger };

// Joint amplitudes G[c][n]: central configuration c in {uu,ud,du,dd},
// n = number of up bath spins (bath state |N-n>_D).
struct TwoQubitAmplitudes {
    double t = 0.0;
    int n_spins = 0;
    Picture picture = Picture::interaction;
    std::array<Eigen::VectorXcd, 4> G;

    double total_norm() const;
    // |G_uu^(n-1)|^2 + |G_ud^(n)|^2 + |G_du^(n)|^2 + |G_dd^(n+1)|^2,
    // conserved for each n by the block structure of the coupling.
    double sector_norm(int n) const;
};

// Interaction-picture time derivative of all 4(N+1) amplitudes.
std::array<Eigen::VectorXcd, 4> eom_rhs(const TwoQubitParams& p, double t,
                                        const std::array<Eigen::VectorXcd, 4>& G);

// Adaptive embedded Runge-Kutta 5(4) propagation of the interaction-picture
// amplitudes, reporting at exactly the requested times (steps are clipped to
// land on them). t_grid must start at 0 and increase. Accumulated norm drift
// beyond 100*tol throws.
std::vector<TwoQubitAmplitudes> integrate(const TwoQubitParams& p,
                                          const TwoQubitState& q0,
                                          const BathState& bath0,
                                          const std::vector<double>& t_grid,
                                          double tol = 1e-9);

// Multiplies the frame phases back in; moduli are unchanged.
TwoQubitAmplitudes to_schrodinger(const TwoQubitAmplitudes& amps,
                                  const TwoQubitParams& p);

// 4x4 reduced state of the central pair, basis {uu, ud, du, dd}.
// Requires Schrodinger-picture amplitudes.
DensityMatrix two_qubit_density(const TwoQubitAmplitudes& amps);

// (N+1)x(N+1) reduced bath state indexed by the down-flip count m.
// Requires Schrodinger-picture amplitudes.
DensityMatrix bath_density_2q(const TwoQubitAmplitudes& amps);

}  // namespace csm
