#include "csm/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace csm::oracle {

namespace {

using cd = std::complex<double>;

double xval(double L, double m) {
    return std::sqrt(std::max((L - m) * (L + m + 1.0), 0.0));
}

void check_capacity(int total_spins) {
    if (total_spins > 14)
        throw std::length_error("oracle: product space capped at 14 spins total");
}

int popcount_low(unsigned st, int bits) {
    return std::popcount(st & ((1u << bits) - 1u));
}

}  // namespace

Eigen::MatrixXcd build_sector(const SingleQubitParams& p) {
    const int N = p.n_spins;
    const double L = 0.5 * N;
    const int dim = 2 * (N + 1);
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    auto idx = [&](int s, int n) { return 2 * n + s; };
    for (int n = 0; n <= N; ++n) {
        const double lz = n - L;
        for (int s = 0; s < 2; ++s) {
            const double sz = (s == 0) ? 0.5 : -0.5;
            H(idx(s, n), idx(s, n)) = p.omega1 * sz + 2.0 * p.g1p * sz * lz;
        }
        if (n + 1 <= N) {
            const double x = p.g1 * xval(L, n - L);
            H(idx(0, n), idx(1, n + 1)) += x;
            H(idx(1, n + 1), idx(0, n)) += x;
        }
    }
    return H;
}

Eigen::MatrixXcd build_sector(const TwoQubitParams& p) {
    const int N = p.n_spins;
    const double L = 0.5 * N;
    const int dim = 4 * (N + 1);
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    constexpr int V1[4] = {1, 1, -1, -1};
    constexpr int V2[4] = {1, -1, 1, -1};
    auto idx = [&](int c, int n) { return 4 * n + c; };
    for (int n = 0; n <= N; ++n) {
        const double lz = n - L;
        for (int c = 0; c < 4; ++c) {
            const double v1 = V1[c], v2 = V2[c];
            H(idx(c, n), idx(c, n)) = 0.5 * p.omega1 * v1 + 0.5 * p.omega2 * v2 +
                                      0.5 * p.Jp * v1 * v2 +
                                      (p.g1p * v1 + p.g2p * v2) * lz;
        }
        H(idx(1, n), idx(2, n)) += p.J;
        H(idx(2, n), idx(1, n)) += p.J;
        if (n + 1 <= N) {
            const double x = xval(L, n - L);
            H(idx(2, n + 1), idx(0, n)) += p.g1 * x;
            H(idx(0, n), idx(2, n + 1)) += p.g1 * x;
            H(idx(3, n + 1), idx(1, n)) += p.g1 * x;
            H(idx(1, n), idx(3, n + 1)) += p.g1 * x;
            H(idx(1, n + 1), idx(0, n)) += p.g2 * x;
            H(idx(0, n), idx(1, n + 1)) += p.g2 * x;
            H(idx(3, n + 1), idx(2, n)) += p.g2 * x;
            H(idx(2, n), idx(3, n + 1)) += p.g2 * x;
        }
    }
    return H;
}

Eigen::MatrixXcd build_full(const SingleQubitParams& p) {
    const int N = p.n_spins;
    check_capacity(N + 1);
    const int dim = 1 << (N + 1);
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    for (int st = 0; st < dim; ++st) {
        const int qb = (st >> N) & 1;
        const double sz = qb - 0.5;
        const double lz = popcount_low(static_cast<unsigned>(st), N) - 0.5 * N;
        H(st, st) = p.omega1 * sz + 2.0 * p.g1p * sz * lz;
        for (int j = 0; j < N; ++j) {
            const int bj = (st >> j) & 1;
            if (qb != bj) H(st ^ (1 << N) ^ (1 << j), st) += p.g1;
        }
    }
    return H;
}

Eigen::MatrixXcd build_full(const TwoQubitParams& p) {
    const int N = p.n_spins;
    check_capacity(N + 2);
    const int dim = 1 << (N + 2);
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    for (int st = 0; st < dim; ++st) {
        const int q1 = (st >> (N + 1)) & 1;
        const int q2 = (st >> N) & 1;
        const double sz1 = q1 - 0.5, sz2 = q2 - 0.5;
        const double lz = popcount_low(static_cast<unsigned>(st), N) - 0.5 * N;
        H(st, st) = p.omega1 * sz1 + p.omega2 * sz2 + 2.0 * p.Jp * sz1 * sz2 +
                    2.0 * (p.g1p * sz1 + p.g2p * sz2) * lz;
        if (q1 != q2) H(st ^ (3 << N), st) += p.J;
        for (int j = 0; j < N; ++j) {
            const int bj = (st >> j) & 1;
            if (q1 != bj) H(st ^ (1 << (N + 1)) ^ (1 << j), st) += p.g1;
            if (q2 != bj) H(st ^ (1 << N) ^ (1 << j), st) += p.g2;
        }
    }
    return H;
}

Eigen::MatrixXcd build_full_individual(const SingleQubitParams& p1,
                                       const SingleQubitParams& p2) {
    const int N1 = p1.n_spins, N2 = p2.n_spins;
    check_capacity(N1 + N2 + 2);
    const int dim = 1 << (N1 + N2 + 2);
    const int q1_bit = N1 + N2 + 1, q2_bit = N1 + N2;
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    for (int st = 0; st < dim; ++st) {
        const int q1 = (st >> q1_bit) & 1;
        const int q2 = (st >> q2_bit) & 1;
        const double sz1 = q1 - 0.5, sz2 = q2 - 0.5;
        double lz1 = -0.5 * N1, lz2 = -0.5 * N2;
        for (int j = 0; j < N2; ++j) lz2 += (st >> j) & 1;
        for (int j = N2; j < N1 + N2; ++j) lz1 += (st >> j) & 1;
        H(st, st) = p1.omega1 * sz1 + p2.omega1 * sz2 + 2.0 * p1.g1p * sz1 * lz1 +
                    2.0 * p2.g1p * sz2 * lz2;
        for (int j = N2; j < N1 + N2; ++j)
            if (q1 != ((st >> j) & 1)) H(st ^ (1 << q1_bit) ^ (1 << j), st) += p1.g1;
        for (int j = 0; j < N2; ++j)
            if (q2 != ((st >> j) & 1)) H(st ^ (1 << q2_bit) ^ (1 << j), st) += p2.g1;
    }
    return H;
}

Eigen::VectorXcd propagate(const Eigen::MatrixXcd& H, const Eigen::VectorXcd& psi0,
                           double t) {
    if (H.rows() != H.cols() || H.rows() != psi0.size())
        throw std::invalid_argument("propagate: dimension mismatch");
    const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
    if ((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("propagate: H must be hermitian");
    if (std::abs(psi0.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("propagate: psi0 must be normalized");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    const Eigen::VectorXcd phases =
        (cd(0.0, -t) * es.eigenvalues().array()).exp().matrix();
    return es.eigenvectors() *
           (phases.array() * (es.eigenvectors().adjoint() * psi0).array()).matrix();
}

Eigen::VectorXcd embed(const QubitState& q0, const BathState& bath0) {
    const int N = bath0.n_spins();
    check_capacity(N + 1);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(1 << (N + 1));
    for (int B = 0; B < (1 << N); ++B) {
        const int m = N - std::popcount(static_cast<unsigned>(B));
        const cd amp = bath0.gamma_m(m) / std::sqrt(binomial_d(N, m));
        psi(B) += q0.f_down * amp;
        psi(B | (1 << N)) += q0.f_up * amp;
    }
    return psi;
}

Eigen::VectorXcd embed(const TwoQubitState& q0, const BathState& bath0) {
    const int N = bath0.n_spins();
    check_capacity(N + 2);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(1 << (N + 2));
    constexpr int Q1[4] = {1, 1, 0, 0};
    constexpr int Q2[4] = {1, 0, 1, 0};
    for (int B = 0; B < (1 << N); ++B) {
        const int m = N - std::popcount(static_cast<unsigned>(B));
        const cd amp = bath0.gamma_m(m) / std::sqrt(binomial_d(N, m));
        for (int c = 0; c < 4; ++c)
            psi(B | (Q2[c] << N) | (Q1[c] << (N + 1))) +=
                q0.amp[static_cast<std::size_t>(c)] * amp;
    }
    return psi;
}

Eigen::VectorXcd embed_individual(const TwoQubitState& q0, const BathState& bath1,
                                  const BathState& bath2) {
    const int N1 = bath1.n_spins(), N2 = bath2.n_spins();
    check_capacity(N1 + N2 + 2);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(1 << (N1 + N2 + 2));
    constexpr int Q1[4] = {1, 1, 0, 0};
    constexpr int Q2[4] = {1, 0, 1, 0};
    for (int B1 = 0; B1 < (1 << N1); ++B1) {
        const int m1 = N1 - std::popcount(static_cast<unsigned>(B1));
        const cd a1 = bath1.gamma_m(m1) / std::sqrt(binomial_d(N1, m1));
        for (int B2 = 0; B2 < (1 << N2); ++B2) {
            const int m2 = N2 - std::popcount(static_cast<unsigned>(B2));
            const cd a2 = bath2.gamma_m(m2) / std::sqrt(binomial_d(N2, m2));
            for (int c = 0; c < 4; ++c)
                psi((B1 << N2) | B2 | (Q2[c] << (N1 + N2)) | (Q1[c] << (N1 + N2 + 1))) +=
                    q0.amp[static_cast<std::size_t>(c)] * a1 * a2;
        }
    }
    return psi;
}

Eigen::VectorXcd sector_initial(const QubitState& q0, const BathState& bath0) {
    const int N = bath0.n_spins();
    Eigen::VectorXcd psi(2 * (N + 1));
    for (int n = 0; n <= N; ++n) {
        psi(2 * n + 0) = q0.f_up * bath0.gamma_for_excitation(n);
        psi(2 * n + 1) = q0.f_down * bath0.gamma_for_excitation(n);
    }
    return psi;
}

Eigen::VectorXcd sector_initial(const TwoQubitState& q0, const BathState& bath0) {
    const int N = bath0.n_spins();
    Eigen::VectorXcd psi(4 * (N + 1));
    for (int n = 0; n <= N; ++n)
        for (int c = 0; c < 4; ++c)
            psi(4 * n + c) =
                q0.amp[static_cast<std::size_t>(c)] * bath0.gamma_for_excitation(n);
    return psi;
}

SingleAmplitudeTable extract(const Eigen::VectorXcd& psi, int n_spins, double t) {
    const int N = n_spins;
    SingleAmplitudeTable out;
    out.t = t;
    out.n_spins = N;
    out.F_up.setZero(N + 1);
    out.F_down.setZero(N + 1);
    for (int B = 0; B < (1 << N); ++B) {
        const int n = std::popcount(static_cast<unsigned>(B));
        const double w = 1.0 / std::sqrt(binomial_d(N, n));
        out.F_up(n) += psi(B | (1 << N)) * w;
        out.F_down(n) += psi(B) * w;
    }
    return out;
}

std::array<Eigen::VectorXcd, 4> extract_two(const Eigen::VectorXcd& psi, int n_spins) {
    const int N = n_spins;
    std::array<Eigen::VectorXcd, 4> G;
    for (auto& g : G) g.setZero(N + 1);
    constexpr int Q1[4] = {1, 1, 0, 0};
    constexpr int Q2[4] = {1, 0, 1, 0};
    for (int B = 0; B < (1 << N); ++B) {
        const int n = std::popcount(static_cast<unsigned>(B));
        const double w = 1.0 / std::sqrt(binomial_d(N, n));
        for (int c = 0; c < 4; ++c)
            G[static_cast<std::size_t>(c)](n) +=
                psi(B | (Q2[c] << N) | (Q1[c] << (N + 1))) * w;
    }
    return G;
}

Eigen::Matrix2cd reduce_central_one(const Eigen::VectorXcd& psi, int bath_bits) {
    const int dimB = 1 << bath_bits;
    if (psi.size() != 2 * dimB)
        throw std::invalid_argument("reduce_central_one: dimension mismatch");
    Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
    for (int B = 0; B < dimB; ++B) {
        const cd up = psi(B | dimB), dn = psi(B);
        r(0, 0) += up * std::conj(up);
        r(0, 1) += up * std::conj(dn);
        r(1, 0) += dn * std::conj(up);
        r(1, 1) += dn * std::conj(dn);
    }
    return r;
}

Eigen::Matrix4cd reduce_central_two(const Eigen::VectorXcd& psi, int bath_bits) {
    const int dimB = 1 << bath_bits;
    if (psi.size() != 4 * dimB)
        throw std::invalid_argument("reduce_central_two: dimension mismatch");
    constexpr int Q1[4] = {1, 1, 0, 0};
    constexpr int Q2[4] = {1, 0, 1, 0};
    Eigen::Matrix4cd r = Eigen::Matrix4cd::Zero();
    for (int B = 0; B < dimB; ++B)
        for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d)
                r(c, d) += psi(B | (Q2[c] << bath_bits) | (Q1[c] << (bath_bits + 1))) *
                           std::conj(psi(B | (Q2[d] << bath_bits) | (Q1[d] << (bath_bits + 1))));
    return r;
}

Eigen::Matrix4cd reduce_bath_pair(const Eigen::VectorXcd& psi, int j1, int j2) {
    if (j1 == j2) throw std::invalid_argument("reduce_bath_pair: sites must differ");
    const auto dim = psi.size();
    const int mask = (1 << j1) | (1 << j2);
    auto row = [&](int st) {
        const int b1 = (st >> j1) & 1, b2 = (st >> j2) & 1;
        return 2 * (1 - b1) + (1 - b2);
    };
    auto with_pattern = [&](int st, int r) {
        const int b1 = 1 - (r >> 1), b2 = 1 - (r & 1);
        return (st & ~mask) | (b1 << j1) | (b2 << j2);
    };
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    for (int st = 0; st < dim; ++st) {
        const int r = row(st);
        for (int rp = 0; rp < 4; ++rp)
            rho(r, rp) += psi(st) * std::conj(psi(with_pattern(st, rp)));
    }
    return rho;
}

}  // namespace csm::oracle
