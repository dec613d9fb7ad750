#include "csm/single_qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace csm {

namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

void check_params(const SingleQubitParams& p) {
    if (p.n_spins < 1 || p.n_spins > BathState::max_spins)
        throw std::invalid_argument("SingleQubitParams: n_spins out of range [1,62]");
}

// W and V for all sector indices 0..N+1 at once.
void wv_all(const SpectralData& sd, double t, Eigen::VectorXcd& W, Eigen::VectorXcd& V) {
    const int N = sd.n_spins;
    W.resize(N + 2);
    V.setZero(N + 2);
    W(0) = std::exp(-0.5 * I * sd.b(0) * t);
    W(N + 1) = std::exp(-0.5 * I * sd.b(N + 1) * t);
    for (int n = 1; n <= N; ++n) {
        const double half = 0.5 * sd.A(n) * t;
        const double c = std::cos(half), s = std::sin(half);
        W(n) = cd(c, -sd.b(n) / sd.A(n) * s);
        V(n) = cd(0.0, -2.0 * sd.a(n) / sd.A(n) * s);
    }
}

}  // namespace

QubitState QubitState::validated(cd f_up, cd f_down) {
    if (std::abs(std::norm(f_up) + std::norm(f_down) - 1.0) > 1e-12)
        throw std::invalid_argument("QubitState: amplitudes must be normalized");
    return {f_up, f_down};
}

SpectralData spectral(const SingleQubitParams& p) {
    check_params(p);
    const int N = p.n_spins;
    const double L = 0.5 * N;
    SpectralData sd;
    sd.n_spins = N;
    sd.a.resize(N + 2);
    sd.b.resize(N + 2);
    sd.A.resize(N + 2);
    for (int n = 0; n <= N + 1; ++n) {
        const double prod = (2.0 * L - n + 1.0) * n;
        sd.a(n) = p.g1 * std::sqrt(std::max(prod, 0.0));
        sd.b(n) = p.omega1 + p.g1p * (2.0 * (n - L) - 1.0);
        sd.A(n) = std::hypot(sd.b(n), 2.0 * sd.a(n));
    }
    sd.a(0) = sd.a(N + 1) = 0.0;
    return sd;
}

std::pair<cd, cd> wv(const SingleQubitParams& p, int n, double t) {
    check_params(p);
    const int N = p.n_spins;
    if (n < 0 || n > N + 1) throw std::invalid_argument("wv: sector index out of range");
    const SpectralData sd = spectral(p);
    if (n == 0 || n == N + 1) return {std::exp(-0.5 * I * sd.b(n) * t), 0.0};
    const double half = 0.5 * sd.A(n) * t;
    const double c = std::cos(half), s = std::sin(half);
    return {cd(c, -sd.b(n) / sd.A(n) * s), cd(0.0, -2.0 * sd.a(n) / sd.A(n) * s)};
}

SingleAmplitudeTable evolve(const SingleQubitParams& p, const QubitState& q0,
                            const BathState& bath0, double t) {
    check_params(p);
    if (bath0.n_spins() != p.n_spins)
        throw std::invalid_argument("evolve: bath size does not match params");
    const int N = p.n_spins;
    const SpectralData sd = spectral(p);
    Eigen::VectorXcd W, V;
    wv_all(sd, t, W, V);
    const cd ph = std::exp(0.5 * I * p.g1p * t);

    SingleAmplitudeTable out;
    out.t = t;
    out.n_spins = N;
    out.F_up.resize(N + 1);
    out.F_down.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        const cd qn = bath0.gamma_for_excitation(n);
        const cd qp = bath0.gamma_for_excitation(n + 1);
        const cd qm = bath0.gamma_for_excitation(n - 1);
        out.F_up(n) = ph * (q0.f_up * qn * W(n + 1) + q0.f_down * qp * V(n + 1));
        out.F_down(n) = ph * (q0.f_down * qn * std::conj(W(n)) + q0.f_up * qm * V(n));
    }
    return out;
}

DensityMatrix qubit_density(const SingleAmplitudeTable& table) {
    Eigen::Matrix2cd r;
    r(0, 0) = table.F_up.squaredNorm();
    r(1, 1) = table.F_down.squaredNorm();
    r(0, 1) = table.F_down.dot(table.F_up);
    r(1, 0) = std::conj(r(0, 1));
    return DensityMatrix::validated(r);
}

DensityMatrix bath_density(const SingleAmplitudeTable& table) {
    const int N = table.n_spins;
    Eigen::VectorXcd up_m(N + 1), dn_m(N + 1);
    for (int m = 0; m <= N; ++m) {
        up_m(m) = table.F_up(N - m);
        dn_m(m) = table.F_down(N - m);
    }
    Eigen::MatrixXcd r = up_m * up_m.adjoint() + dn_m * dn_m.adjoint();
    return DensityMatrix::validated(r);
}

Observables observables(const SingleQubitParams& p, const QubitState& q0,
                        const BathState& bath0, double t) {
    check_params(p);
    if (std::abs(std::abs(q0.f_up) - 1.0) > 1e-12 || std::abs(q0.f_down) > 1e-12)
        throw std::invalid_argument(
            "observables: closed forms need the initial state |up>; "
            "use evolve + qubit_density for general states");
    const int N = p.n_spins;
    const SpectralData sd = spectral(p);
    Eigen::VectorXcd W, V;
    wv_all(sd, t, W, V);

    double sz = 0.0;
    for (int n = 0; n <= N; ++n) {
        const double qn2 = std::norm(bath0.gamma_for_excitation(n));
        const int k = n + 1;
        if (k == N + 1) {
            sz += 0.5 * qn2;
        } else {
            const double A2 = sd.A(k) * sd.A(k);
            sz += 0.5 * qn2 *
                  (sd.b(k) * sd.b(k) + 4.0 * sd.a(k) * sd.a(k) * std::cos(sd.A(k) * t)) / A2;
        }
    }
    cd sp = 0.0;
    for (int n = 1; n <= N; ++n) {
        sp += bath0.gamma_for_excitation(n - 1) * std::conj(bath0.gamma_for_excitation(n)) *
              V(n) * std::conj(W(n + 1));
    }
    Observables o;
    o.sx = sp.real();
    o.sy = sp.imag();
    o.sz = sz;
    o.purity = 0.5 + 2.0 * (o.sx * o.sx + o.sy * o.sy + o.sz * o.sz);
    return o;
}

Eigen::Matrix2cd Channel::apply(const Eigen::Matrix2cd& rho0) const {
    Eigen::Matrix2cd r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            cd s = 0.0;
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) s += Y[a][b][c][d] * rho0(c, d);
            r(a, b) = s;
        }
    return r;
}

Channel channel(const SingleQubitParams& p, const BathState& bath0, double t) {
    check_params(p);
    if (bath0.n_spins() != p.n_spins)
        throw std::invalid_argument("channel: bath size does not match params");
    const int N = p.n_spins;
    const SpectralData sd = spectral(p);
    Eigen::VectorXcd W, V;
    wv_all(sd, t, W, V);
    auto q = [&](int n) { return bath0.gamma_for_excitation(n); };

    Channel ch{};
    cd y0000 = 0.0, y0011 = 0.0, y0001 = 0.0, y1100 = 0.0, y1111 = 0.0, y1101 = 0.0;
    cd y0100 = 0.0, y0111 = 0.0, y0101 = 0.0, y0110 = 0.0;
    for (int n = 0; n <= N; ++n) {
        const double qn2 = std::norm(q(n));
        y0000 += qn2 * std::norm(W(n + 1));
        y1111 += qn2 * std::norm(W(n));
        y0101 += qn2 * W(n) * W(n + 1);
    }
    for (int n = 1; n <= N; ++n) {
        const cd qmc = q(n - 1) * std::conj(q(n));
        y0011 += std::norm(q(n)) * std::norm(V(n));
        y1100 += std::norm(q(n - 1)) * std::norm(V(n));
        y0001 += qmc * W(n) * std::conj(V(n));
        y1101 += qmc * W(n) * V(n);
        y0100 += std::conj(qmc) * W(n + 1) * std::conj(V(n));
        y0111 += std::conj(qmc) * W(n - 1) * V(n);
    }
    for (int n = 1; n <= N - 1; ++n) {
        y0110 += std::conj(q(n - 1)) * q(n + 1) * std::conj(V(n)) * V(n + 1);
    }
    ch.Y[0][0][0][0] = y0000;
    ch.Y[0][0][1][1] = y0011;
    ch.Y[0][0][0][1] = y0001;
    ch.Y[0][0][1][0] = std::conj(y0001);
    ch.Y[1][1][0][0] = y1100;
    ch.Y[1][1][1][1] = y1111;
    ch.Y[1][1][0][1] = y1101;
    ch.Y[1][1][1][0] = std::conj(y1101);
    ch.Y[0][1][0][0] = y0100;
    ch.Y[1][0][0][0] = std::conj(y0100);
    ch.Y[0][1][1][1] = y0111;
    ch.Y[1][0][1][1] = std::conj(y0111);
    ch.Y[0][1][0][1] = y0101;
    ch.Y[1][0][1][0] = std::conj(y0101);
    ch.Y[0][1][1][0] = y0110;
    ch.Y[1][0][0][1] = std::conj(y0110);
    return ch;
}

std::optional<RevivalPrediction> revival_time(const SingleQubitParams& p,
                                              const BathState& bath0) {
    check_params(p);
    if (bath0.n_spins() != p.n_spins)
        throw std::invalid_argument("revival_time: bath size does not match params");
    const int N = p.n_spins;
    const double g = std::abs(p.g1);
    if (g == 0.0) return std::nullopt;

    int n_max = 0;
    double best = -1.0;
    for (int n = 0; n <= N; ++n) {
        const double w = std::abs(bath0.gamma_for_excitation(n));
        if (w >= best) {
            best = w;
            n_max = n;
        }
    }

    if (std::abs(p.g1p) <= 1e-12 * g) {
        const SpectralData sd = spectral(p);
        const double dA = std::abs(sd.A(n_max) - sd.A(std::min(n_max + 1, N + 1)));
        if (dA <= 0.0) return std::nullopt;
        return RevivalPrediction{M_PI / dA, n_max};
    }
    if (std::abs(p.g1p - p.g1) <= 1e-12 * g) {
        const double L = 0.5 * N;
        return RevivalPrediction{L * M_PI / g, n_max};
    }
    return std::nullopt;
}

}  // namespace csm
