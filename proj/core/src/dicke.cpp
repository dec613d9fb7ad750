#include "csm/dicke.hpp"

#include <cmath>
#include <stdexcept>

namespace csm {

std::uint64_t binomial(int n, int k) {
    if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
    if (n > 64) throw std::domain_error("binomial: exact range is n <= 64");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(r);
}

double binomial_d(int n, int k) { return static_cast<double>(binomial(n, k)); }

namespace {

void check_spins(int n_spins) {
    if (n_spins < 1 || n_spins > BathState::max_spins)
        throw std::invalid_argument("BathState: n_spins out of range [1,62]");
}

}  // namespace

BathState BathState::from_amplitudes(int n_spins, Eigen::VectorXcd gamma) {
    check_spins(n_spins);
    if (gamma.size() != n_spins + 1)
        throw std::invalid_argument("BathState: amplitude vector must have N+1 entries");
    if (std::abs(gamma.squaredNorm() - 1.0) > 1e-12)
        throw std::invalid_argument("BathState: amplitudes must be normalized");
    return BathState(n_spins, std::move(gamma));
}

BathState BathState::spin_coherent(int n_spins, double theta, double phi) {
    check_spins(n_spins);
    if (theta < 0.0 || theta > M_PI)
        throw std::invalid_argument("spin_coherent: theta must lie in [0, pi]");
    if (theta == 0.0) return fully_polarized(n_spins, 0);

    const int N = n_spins;
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    Eigen::VectorXcd gamma(N + 1);
    for (int n = 0; n <= N; ++n) {
        const double mag =
            std::pow(c, n) * std::pow(s, N - n) * std::sqrt(binomial_d(N, n));
        const std::complex<double> q =
            mag * std::exp(std::complex<double>(0.0, -phi * n));
        gamma(N - n) = q;
    }
    gamma.normalize();
    return BathState(N, std::move(gamma));
}

BathState BathState::equally_weighted(int n_spins) {
    check_spins(n_spins);
    if (n_spins < 2)
        throw std::invalid_argument("equally_weighted: need at least 2 bath spins");
    Eigen::VectorXcd gamma =
        Eigen::VectorXcd::Constant(n_spins + 1, 1.0 / std::sqrt(n_spins + 1.0));
    return BathState(n_spins, std::move(gamma));
}

BathState BathState::w_class(int n_spins, std::complex<double> gamma_nm1,
                             std::complex<double> gamma_n) {
    check_spins(n_spins);
    if (std::abs(std::norm(gamma_nm1) + std::norm(gamma_n) - 1.0) > 1e-12)
        throw std::invalid_argument("w_class: |gamma_{N-1}|^2 + |gamma_N|^2 must be 1");
    Eigen::VectorXcd gamma = Eigen::VectorXcd::Zero(n_spins + 1);
    gamma(n_spins - 1) = gamma_nm1;
    gamma(n_spins) = gamma_n;
    return BathState(n_spins, std::move(gamma));
}

BathState BathState::fully_polarized(int n_spins, int m_down) {
    check_spins(n_spins);
    if (m_down < 0 || m_down > n_spins)
        throw std::invalid_argument("fully_polarized: m out of range");
    Eigen::VectorXcd gamma = Eigen::VectorXcd::Zero(n_spins + 1);
    gamma(m_down) = 1.0;
    return BathState(n_spins, std::move(gamma));
}

PairElementTable::PairElementTable(int n_spins) : n_spins_(n_spins) {
    if (n_spins < 2 || n_spins > BathState::max_spins)
        throw std::invalid_argument("PairElementTable: n_spins out of range [2,62]");
    const int N = n_spins;
    const auto sz = static_cast<std::size_t>(N + 1);
    diag_uu_.resize(sz);
    diag_ud_.resize(sz);
    diag_dd_.resize(sz);
    step_up_.resize(sz);
    step_dn_.resize(sz);
    double_up_.resize(sz);
    for (int m = 0; m <= N; ++m) {
        const double den = binomial_d(N, m);
        const auto i = static_cast<std::size_t>(m);
        diag_uu_[i] = binomial_d(N - 2, m) / den;
        diag_ud_[i] = binomial_d(N - 2, m - 1) / den;
        diag_dd_[i] = binomial_d(N - 2, m - 2) / den;
        auto step = [&](int top) {
            const double num = binomial_d(N - 2, top);
            if (num == 0.0) return 0.0;
            return num / std::sqrt(den * binomial_d(N, m + 1));
        };
        step_up_[i] = step(m);
        step_dn_[i] = step(m - 1);
        const double dnum = binomial_d(N - 2, m);
        double_up_[i] =
            (m + 2 <= N && dnum != 0.0) ? dnum / std::sqrt(den * binomial_d(N, m + 2)) : 0.0;
    }
}

}  // namespace csm
