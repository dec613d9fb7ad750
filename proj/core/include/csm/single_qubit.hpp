#pragma once

#include <cmath>
#include <complex>
#include <optional>

#include "csm/density_matrix.hpp"
#include "csm/dicke.hpp"

namespace csm {

// One central qubit coupled homogeneously to the bath. Transverse
// coupling g1, longitudinal coupling g1p, qubit splitting omega1.
// All rates are in the same units; time is in inverse rate units.
struct SingleQubitParams {
    double omega1 = 1.0;
    double g1 = 1.0;
    double g1p = 0.0;
    int n_spins = 0;
};

struct QubitState {
    std::complex<double> f_up{1.0, 0.0};
    std::complex<double> f_down{0.0, 0.0};

    static QubitState up() { return {1.0, 0.0}; }
    static QubitState down() { return {0.0, 1.0}; }
    static QubitState plus() { return {M_SQRT1_2, M_SQRT1_2}; }
    static QubitState minus() { return {M_SQRT1_2, -M_SQRT1_2}; }
    static QubitState validated(std::complex<double> f_up, std::complex<double> f_down);
};

// Per-sector frequencies, index n = 0..N+1:
//   a[n] = g1 sqrt((2L - n + 1) n), zero at both ends
//   b[n] = omega1 + g1p (2(n - L) - 1)
//   A[n] = sqrt(b[n]^2 + 4 a[n]^2)
struct SpectralData {
    Eigen::VectorXd a, b, A;
    int n_spins = 0;
};

SpectralData spectral(const SingleQubitParams& p);

// Propagator entries of the closed 2x2 sector blocks:
//   n = 1..N:      W = cos(At/2) - i (b/A) sin(At/2),  V = -i (2a/A) sin(At/2)
//   n = 0, N+1:    W = exp(-i b t / 2),                V = 0
// Always |W|^2 + |V|^2 = 1.
std::pair<std::complex<double>, std::complex<double>> wv(const SingleQubitParams& p,
                                                         int n, double t);

// Joint amplitudes at time t. Index n = 0..N counts up bath spins;
// F_up[n] multiplies |up>|N-n>_D and F_down[n] multiplies |down>|N-n>_D.
struct SingleAmplitudeTable {
    double t = 0.0;
    int n_spins = 0;
    Eigen::VectorXcd F_up, F_down;
};

SingleAmplitudeTable evolve(const SingleQubitParams& p, const QubitState& q0,
                            const BathState& bath0, double t);

// 2x2 reduced state of the qubit, basis {up, down}.
DensityMatrix qubit_density(const SingleAmplitudeTable& table);

// (N+1)x(N+1) reduced state of the bath in the symmetric basis,
// indexed by the down-flip count m.
DensityMatrix bath_density(const SingleAmplitudeTable& table);

struct Observables {
    double sx = 0.0, sy = 0.0, sz = 0.0, purity = 1.0;
};

// Closed-form qubit observables for the initial state |up>.
// Other initial states throw; use evolve + qubit_density for those.
Observables observables(const SingleQubitParams& p, const QubitState& q0,
                        const BathState& bath0, double t);

// Linear map rho(0) -> rho(t) on the qubit: rho_ab(t) = sum_cd Y[a][b][c][d] rho_cd(0).
// Indices 0 = up, 1 = down.
struct Channel {
    std::complex<double> Y[2][2][2][2];

    Eigen::Matrix2cd apply(const Eigen::Matrix2cd& rho0) const;
};

Channel channel(const SingleQubitParams& p, const BathState& bath0, double t);

struct RevivalPrediction {
    double t_r = 0.0;
    int n_max = 0;
};

// Predicted first coherence revival time. Available for the purely
// transverse coupling (g1p = 0, dephasing of neighboring sector
// frequencies) and the isotropic coupling (g1p = g1, equally spaced
// frequencies); other anisotropies return nullopt.
std::optional<RevivalPrediction> revival_time(const SingleQubitParams& p,
                                              const BathState& bath0);

}  // namespace csm
