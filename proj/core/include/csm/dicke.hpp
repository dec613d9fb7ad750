#pragma once

#include <complex>
#include <cstdint>
#include <vector>
#include <Eigen/Dense>

namespace csm {

// Exact binomial coefficient C(n,k). Returns 0 for k < 0 or k > n.
// Exact up to n = 64; larger n throws std::domain_error.
std::uint64_t binomial(int n, int k);

// Same value as a double, with the out-of-range-gives-zero convention.
double binomial_d(int n, int k);

// Superposition of the N+1 symmetric states of N bath spins.
// gamma[m] is the amplitude of the symmetric state with m spins
// flipped down from the all-up product state.
class BathState {
public:
    static constexpr int max_spins = 62;

    static BathState from_amplitudes(int n_spins, Eigen::VectorXcd gamma);
    static BathState spin_coherent(int n_spins, double theta, double phi);
    static BathState equally_weighted(int n_spins);
    static BathState w_class(int n_spins, std::complex<double> gamma_nm1,
                             std::complex<double> gamma_n);
    static BathState fully_polarized(int n_spins, int m_down = 0);

    int n_spins() const { return n_spins_; }
    double half_spin() const { return 0.5 * n_spins_; }
    const Eigen::VectorXcd& gamma() const { return gamma_; }
    std::complex<double> gamma_m(int m) const {
        return (m < 0 || m > n_spins_) ? 0.0 : gamma_(m);
    }

    // Amplitude addressed by the number n of up spins: gamma[N-n].
    // Out-of-range n gives 0.
    std::complex<double> gamma_for_excitation(int n) const {
        return gamma_m(n_spins_ - n);
    }

private:
    BathState(int n_spins, Eigen::VectorXcd gamma)
        : n_spins_(n_spins), gamma_(std::move(gamma)) {}
    int n_spins_;
    Eigen::VectorXcd gamma_;
};

// Matrix elements of two-site spin operators between symmetric states,
// for one fixed pair of bath spins. Values are binomial ratios in [0,1].
// Index m counts down flips. Element families, with P = projector and
// T +/- the single-site ladder operators on the pair sites 1, 2:
//   diag_uu[m]   <m| P1up P2up |m>
//   diag_ud[m]   <m| P1up P2dn |m> = <m| P1dn P2up |m> = <m| T1- T2+ |m>
//   diag_dd[m]   <m| P1dn P2dn |m>
//   step_up[m]   <m| P1up T2+ |m+1> and the three elements related by
//                site swap and transposition (spectator site up)
//   step_dn[m]   <m| P1dn T2+ |m+1> and swaps (spectator site down)
//   double_up[m] <m| T1+ T2+ |m+2>
class PairElementTable {
public:
    explicit PairElementTable(int n_spins);

    int n_spins() const { return n_spins_; }
    double diag_uu(int m) const { return at(diag_uu_, m); }
    double diag_ud(int m) const { return at(diag_ud_, m); }
    double diag_dd(int m) const { return at(diag_dd_, m); }
    double step_up(int m) const { return at(step_up_, m); }
    double step_dn(int m) const { return at(step_dn_, m); }
    double double_up(int m) const { return at(double_up_, m); }

private:
    double at(const std::vector<double>& v, int m) const {
        return (m < 0 || m > n_spins_) ? 0.0 : v[static_cast<std::size_t>(m)];
    }
    int n_spins_;
    std::vector<double> diag_uu_, diag_ud_, diag_dd_, step_up_, step_dn_, double_up_;
};

inline PairElementTable pair_elements(int n_spins) { return PairElementTable(n_spins); }

}  // namespace csm
