#include "csm/two_qubit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csm {

namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

// v1, v2 signs of the central configurations {uu, ud, du, dd}
constexpr int V1[4] = {1, 1, -1, -1};
constexpr int V2[4] = {1, -1, 1, -1};

// Per-step error budget divisor. Local truncation errors accumulate over
// many steps; keeping each step's error estimate at tol/256 leaves the
// whole-run amplitude error and norm drift well under 100*tol on spans
// of a few hundred inverse couplings.
constexpr double error_margin = 256.0;

void check_params(const TwoQubitParams& p) {
    if (p.n_spins < 1 || p.n_spins > BathState::max_spins)
        throw std::invalid_argument("TwoQubitParams: n_spins out of range [1,62]");
}

struct Rhs {
    TwoQubitParams p;
    int N;
    double L;
    Eigen::VectorXd xs;       // xs[n] = sqrt((L-(n-L))(L+(n-L)+1)), xs[N] = 0
    Eigen::VectorXcd P1, P2;  // frame phases, size N+2

    explicit Rhs(const TwoQubitParams& params)
        : p(params), N(params.n_spins), L(0.5 * params.n_spins) {
        xs.resize(N + 1);
        for (int n = 0; n <= N; ++n) {
            const double m = n - L;
            xs(n) = std::sqrt(std::max((L - m) * (L + m + 1.0), 0.0));
        }
        P1.resize(N + 2);
        P2.resize(N + 2);
    }

    void operator()(double t, const Eigen::VectorXcd& y, Eigen::VectorXcd& dy) {
        const cd u1 = std::exp(I * (p.omega1 * t));
        const cd u2 = std::exp(I * (p.omega2 * t));
        const cd wg = std::exp(I * ((p.g1p - p.g2p) * t));
        const cd wJ = std::exp(I * (p.Jp * t));
        const cd s1 = std::exp(I * (2.0 * p.g1p * t));
        const cd s2 = std::exp(I * (2.0 * p.g2p * t));
        P1(0) = std::exp(-I * (2.0 * p.g1p * L * t));
        P2(0) = std::exp(-I * (2.0 * p.g2p * L * t));
        for (int n = 1; n <= N + 1; ++n) {
            P1(n) = P1(n - 1) * s1;
            P2(n) = P2(n - 1) * s2;
        }

        const cd j12 = p.J * u1 * std::conj(u2);
        const cd j21 = std::conj(j12);
        const cd uu_ud = p.g2 * u2 * std::conj(wg) * wJ;
        const cd uu_du = p.g1 * u1 * wg * wJ;
        const cd ud_uu = p.g2 * std::conj(u2) * wg * std::conj(wJ);
        const cd ud_dd = p.g1 * u1 * std::conj(wg) * std::conj(wJ);
        const cd du_uu = p.g1 * std::conj(u1) * std::conj(wg) * std::conj(wJ);
        const cd du_dd = p.g2 * u2 * wg * std::conj(wJ);
        const cd dd_ud = p.g1 * std::conj(u1) * wg * wJ;
        const cd dd_du = p.g2 * std::conj(u2) * std::conj(wg) * wJ;

        const int stride = N + 1;
        const cd* G0 = y.data();
        const cd* G1 = y.data() + stride;
        const cd* G2 = y.data() + 2 * stride;
        const cd* G3 = y.data() + 3 * stride;
        cd* D0 = dy.data();
        cd* D1 = dy.data() + stride;
        cd* D2 = dy.data() + 2 * stride;
        cd* D3 = dy.data() + 3 * stride;

        auto store = [](cd* dst, cd acc) { *dst = cd(acc.imag(), -acc.real()); };

        for (int n = 0; n <= N; ++n) {
            cd a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
            if (n < N) {
                const double x = xs(n);
                a0 += x * (G1[n + 1] * uu_ud * P2(n) + G2[n + 1] * uu_du * P1(n));
                a1 += x * ud_dd * P1(n + 1) * G3[n + 1];
                a2 += x * du_dd * P2(n + 1) * G3[n + 1];
            }
            a1 += j12 * P1(n) * std::conj(P2(n)) * G2[n];
            a2 += j21 * std::conj(P1(n)) * P2(n) * G1[n];
            if (n >= 1) {
                const double x = xs(n - 1);
                a1 += x * ud_uu * std::conj(P2(n - 1)) * G0[n - 1];
                a2 += x * du_uu * std::conj(P1(n - 1)) * G0[n - 1];
                a3 += x * (G1[n - 1] * dd_ud * std::conj(P1(n)) +
                           G2[n - 1] * dd_du * std::conj(P2(n)));
            }
            store(D0 + n, a0);
            store(D1 + n, a1);
            store(D2 + n, a2);
            store(D3 + n, a3);
        }
    }
};

std::array<Eigen::VectorXcd, 4> split(const Eigen::VectorXcd& y, int N) {
    std::array<Eigen::VectorXcd, 4> G;
    for (int c = 0; c < 4; ++c) G[c] = y.segment(c * (N + 1), N + 1);
    return G;
}

}  // namespace

TwoQubitState TwoQubitState::basis(int index) {
    if (index < 0 || index > 3)
        throw std::invalid_argument("TwoQubitState::basis: index out of range");
    TwoQubitState s{};
    s.amp = {0.0, 0.0, 0.0, 0.0};
    s.amp[static_cast<std::size_t>(index)] = 1.0;
    return s;
}

TwoQubitState TwoQubitState::bell_psi_plus() {
    TwoQubitState s{};
    s.amp = {0.0, M_SQRT1_2, M_SQRT1_2, 0.0};
    return s;
}

TwoQubitState TwoQubitState::validated(const std::array<cd, 4>& amp) {
    double n2 = 0.0;
    for (const cd& a : amp) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > 1e-12)
        throw std::invalid_argument("TwoQubitState: amplitudes must be normalized");
    TwoQubitState s{};
    s.amp = amp;
    return s;
}

double TwoQubitAmplitudes::total_norm() const {
    double n2 = 0.0;
    for (const auto& g : G) n2 += g.squaredNorm();
    return std::sqrt(n2);
}

double TwoQubitAmplitudes::sector_norm(int n) const {
    const int N = n_spins;
    if (n < 0 || n > N + 1)
        throw std::invalid_argument("sector_norm: index out of range");
    double s = 0.0;
    if (n >= 1 && n - 1 <= N) s += std::norm(G[0](n - 1));
    if (n <= N) s += std::norm(G[1](n)) + std::norm(G[2](n));
    if (n + 1 <= N) s += std::norm(G[3](n + 1));
    return s;
}

std::array<Eigen::VectorXcd, 4> eom_rhs(const TwoQubitParams& p, double t,
                                        const std::array<Eigen::VectorXcd, 4>& G) {
    check_params(p);
    const int N = p.n_spins;
    for (const auto& g : G)
        if (g.size() != N + 1)
            throw std::invalid_argument("eom_rhs: amplitude vectors must have N+1 entries");
    Eigen::VectorXcd y(4 * (N + 1)), dy(4 * (N + 1));
    for (int c = 0; c < 4; ++c) y.segment(c * (N + 1), N + 1) = G[c];
    Rhs rhs(p);
    rhs(t, y, dy);
    return split(dy, N);
}

std::vector<TwoQubitAmplitudes> integrate(const TwoQubitParams& p,
                                          const TwoQubitState& q0,
                                          const BathState& bath0,
                                          const std::vector<double>& t_grid,
                                          double tol) {
    check_params(p);
    if (bath0.n_spins() != p.n_spins)
        throw std::invalid_argument("integrate: bath size does not match params");
    if (t_grid.empty() || t_grid.front() != 0.0)
        throw std::invalid_argument("integrate: time grid must start at 0");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (t_grid[i] <= t_grid[i - 1])
            throw std::invalid_argument("integrate: time grid must increase");
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be positive");

    const int N = p.n_spins;
    const int dim = 4 * (N + 1);
    Eigen::VectorXcd y(dim);
    for (int c = 0; c < 4; ++c)
        for (int n = 0; n <= N; ++n)
            y(c * (N + 1) + n) = q0.amp[static_cast<std::size_t>(c)] *
                                 bath0.gamma_for_excitation(n);

    std::vector<TwoQubitAmplitudes> out;
    out.reserve(t_grid.size());
    auto record = [&](double t) {
        TwoQubitAmplitudes a;
        a.t = t;
        a.n_spins = N;
        a.picture = Picture::interaction;
        a.G = split(y, N);
        out.push_back(std::move(a));
    };
    record(0.0);
    if (t_grid.size() == 1) return out;

    // Dormand-Prince 5(4) with first-same-as-last stage reuse.
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    Rhs rhs(p);
    Eigen::VectorXcd k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim);
    Eigen::VectorXcd ytmp(dim), ynew(dim), errv(dim);

    const double hmax =
        0.05 / std::max({std::abs(p.g1), std::abs(p.g2), std::abs(p.J), 1.0});
    const double tol_step = tol / error_margin;
    double t = 0.0;
    double h_prop = std::min(hmax, 1e-3);
    rhs(t, y, k1);

    for (std::size_t gi = 1; gi < t_grid.size(); ++gi) {
        const double target = t_grid[gi];
        while (t < target) {
            const bool landing = h_prop >= target - t;
            const double h = landing ? target - t : h_prop;
            if (h < 1e-12 * std::max(1.0, std::abs(t)))
                throw std::runtime_error("integrate: step size underflow at t = " +
                                         std::to_string(t));

            ytmp = y + h * (a21 * k1);
            rhs(t + c2 * h, ytmp, k2);
            ytmp = y + h * (a31 * k1 + a32 * k2);
            rhs(t + c3 * h, ytmp, k3);
            ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
            rhs(t + c4 * h, ytmp, k4);
            ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
            rhs(t + c5 * h, ytmp, k5);
            ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
            rhs(t + h, ytmp, k6);
            ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            rhs(t + h, ynew, k7);
            errv = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
            const double err = errv.norm();

            if (err <= tol_step) {
                t = landing ? target : t + h;
                y.swap(ynew);
                k1.swap(k7);
                const double grow =
                    (err > 0.0) ? 0.9 * std::pow(tol_step / err, 0.2) : 5.0;
                h_prop = std::min(hmax, h * std::clamp(grow, 0.2, 5.0));
            } else {
                const double shrink = 0.9 * std::pow(tol_step / err, 0.2);
                h_prop = h * std::clamp(shrink, 0.2, 0.9);
            }
        }
        record(target);
    }

    const double drift = std::abs(out.back().total_norm() - 1.0);
    if (drift > 100.0 * tol)
        throw std::runtime_error("integrate: norm drift " + std::to_string(drift) +
                                 " exceeds 100*tol; tighten the tolerance");
    return out;
}

TwoQubitAmplitudes to_schrodinger(const TwoQubitAmplitudes& amps, const TwoQubitParams& p) {
    if (amps.picture == Picture::schrodinger)
        throw std::invalid_argument("to_schrodinger: amplitudes already converted");
    const int N = amps.n_spins;
    const double L = 0.5 * N;
    TwoQubitAmplitudes out = amps;
    out.picture = Picture::schrodinger;
    for (int c = 0; c < 4; ++c) {
        const double v1 = V1[c], v2 = V2[c];
        const cd ph0 = std::exp(-0.5 * I *
                                ((v1 * p.omega1 + v2 * p.omega2 + p.Jp * v1 * v2) * amps.t));
        const double rate = (p.g1p * v1 + p.g2p * v2) * amps.t;
        for (int n = 0; n <= N; ++n)
            out.G[c](n) = amps.G[c](n) * ph0 * std::exp(-I * (rate * (n - L)));
    }
    return out;
}

DensityMatrix two_qubit_density(const TwoQubitAmplitudes& amps) {
    if (amps.picture != Picture::schrodinger)
        throw std::invalid_argument("two_qubit_density: convert to the Schrodinger picture first");
    Eigen::Matrix4cd r;
    for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) r(c, d) = amps.G[d].dot(amps.G[c]);
    r /= r.trace().real();  // absorbs integrator norm drift
    return DensityMatrix::validated(r);
}

DensityMatrix bath_density_2q(const TwoQubitAmplitudes& amps) {
    if (amps.picture != Picture::schrodinger)
        throw std::invalid_argument("bath_density_2q: convert to the Schrodinger picture first");
    const int N = amps.n_spins;
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(N + 1, N + 1);
    for (int c = 0; c < 4; ++c) {
        Eigen::VectorXcd v(N + 1);
        for (int m = 0; m <= N; ++m) v(m) = amps.G[c](N - m);
        r += v * v.adjoint();
    }
    r /= r.trace().real();
    return DensityMatrix::validated(r);
}

}  // namespace csm
