#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <complex>
#include <random>

#include "csm/oracle.hpp"
#include "csm/single_qubit.hpp"
#include "csm/two_qubit.hpp"
#include "support/reference.hpp"

using csm::BathState;
using csm::QubitState;
using csm::SingleQubitParams;
using csm::TwoQubitParams;
using csm::TwoQubitState;
using ref::cd;

namespace oracle = csm::oracle;

TEST_CASE("propagate agrees with the dense matrix exponential") {
    std::mt19937_64 rng(47);
    const int dim = 12;
    Eigen::MatrixXcd M(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            M(i, j) = cd(ref::uniform(rng, -1, 1), ref::uniform(rng, -1, 1));
    const Eigen::MatrixXcd H = 0.5 * (M + M.adjoint());
    const Eigen::VectorXcd psi0 = ref::random_state(rng, dim);
    for (double t : {0.0, 0.8, 5.5}) {
        const Eigen::MatrixXcd U = (cd(0.0, -t) * H).exp();
        const Eigen::VectorXcd expect = U * psi0;
        const Eigen::VectorXcd got = oracle::propagate(H, psi0, t);
        CHECK((got - expect).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(got.norm() == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("propagate validates its inputs") {
    std::mt19937_64 rng(53);
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(4, 4);
    H(0, 1) = 1.0;
    const Eigen::VectorXcd psi0 = ref::random_state(rng, 4);
    CHECK_THROWS_AS(oracle::propagate(H, psi0, 1.0), std::invalid_argument);
    H(1, 0) = 1.0;
    CHECK_THROWS_AS(oracle::propagate(H, 2.0 * psi0, 1.0), std::invalid_argument);
}

TEST_CASE("product-space builders cap the spin count") {
    CHECK_THROWS_AS(oracle::build_full(SingleQubitParams{1, 1, 0, 14}),
                    std::length_error);
    TwoQubitParams two;
    two.n_spins = 13;
    CHECK_THROWS_AS(oracle::build_full(two), std::length_error);
    SingleQubitParams p1{1, 1, 0, 7}, p2{1, 1, 0, 6};
    CHECK_THROWS_AS(oracle::build_full_individual(p1, p2), std::length_error);
}

TEST_CASE("embed and extract invert each other") {
    std::mt19937_64 rng(59);
    const int N = 6;
    const auto bath = BathState::from_amplitudes(N, ref::random_state(rng, N + 1));
    const auto [fu, fd] = ref::random_qubit(rng);
    const auto q0 = QubitState::validated(fu, fd);

    const Eigen::VectorXcd psi = oracle::embed(q0, bath);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-13));
    const auto table = oracle::extract(psi, N, 0.0);
    for (int n = 0; n <= N; ++n) {
        CHECK(std::abs(table.F_up(n) - fu * bath.gamma_for_excitation(n)) < 1e-13);
        CHECK(std::abs(table.F_down(n) - fd * bath.gamma_for_excitation(n)) < 1e-13);
    }

    const auto pair = TwoQubitState::validated(ref::random_pair_state(rng));
    const Eigen::VectorXcd psi2 = oracle::embed(pair, bath);
    CHECK(psi2.norm() == doctest::Approx(1.0).epsilon(1e-13));
    const auto G = oracle::extract_two(psi2, N);
    for (int c = 0; c < 4; ++c)
        for (int n = 0; n <= N; ++n)
            CHECK(std::abs(G[c](n) - pair.amp[c] * bath.gamma_for_excitation(n)) <
                  1e-13);
}

TEST_CASE("full product-space evolution stays in the symmetric sector") {
    std::mt19937_64 rng(61);
    const int N = 4;
    SingleQubitParams p{0.9, 1.1, 0.4, N};
    const auto bath = BathState::from_amplitudes(N, ref::random_state(rng, N + 1));
    const auto [fu, fd] = ref::random_qubit(rng);
    const auto q0 = QubitState::validated(fu, fd);

    const Eigen::MatrixXcd H = oracle::build_full(p);
    const Eigen::VectorXcd psi0 = oracle::embed(q0, bath);
    for (double t : {0.7, 2.9}) {
        const Eigen::VectorXcd psi = oracle::propagate(H, psi0, t);
        const auto table = oracle::extract(psi, N, t);
        const double sector_norm =
            table.F_up.squaredNorm() + table.F_down.squaredNorm();
        CHECK(sector_norm == doctest::Approx(1.0).epsilon(1e-12));

        const auto closed = csm::evolve(p, q0, bath, t);
        for (int n = 0; n <= N; ++n) {
            CHECK(std::abs(table.F_up(n) - closed.F_up(n)) < 1e-12);
            CHECK(std::abs(table.F_down(n) - closed.F_down(n)) < 1e-12);
        }

        const Eigen::Matrix2cd rho = oracle::reduce_central_one(psi, N);
        CHECK((rho - csm::qubit_density(closed).mat()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("two-qubit product space matches the sector Hamiltonian") {
    std::mt19937_64 rng(67);
    const int N = 4;
    TwoQubitParams p;
    p.omega1 = 0.8;
    p.omega2 = 1.3;
    p.J = 0.5;
    p.Jp = -0.3;
    p.g1 = 1.0;
    p.g2 = 0.7;
    p.g1p = 0.6;
    p.g2p = 0.2;
    p.n_spins = N;
    const auto bath = BathState::from_amplitudes(N, ref::random_state(rng, N + 1));
    const auto q0 = TwoQubitState::validated(ref::random_pair_state(rng));

    const Eigen::VectorXcd psi_full =
        oracle::propagate(oracle::build_full(p), oracle::embed(q0, bath), 1.9);
    const Eigen::VectorXcd psi_sec = oracle::propagate(
        oracle::build_sector(p), oracle::sector_initial(q0, bath), 1.9);
    const auto G = oracle::extract_two(psi_full, N);
    double err = 0.0;
    for (int c = 0; c < 4; ++c)
        for (int n = 0; n <= N; ++n)
            err = std::max(err, std::abs(G[c](n) - psi_sec(4 * n + c)));
    CHECK(err < 1e-12);

    const Eigen::Matrix4cd rho = oracle::reduce_central_two(oracle::embed(q0, bath), N);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(std::abs(rho(a, b) - q0.amp[a] * std::conj(q0.amp[b])) < 1e-13);
}

TEST_CASE("bath pair reduction is pair independent and matches known states") {
    std::mt19937_64 rng(71);
    const int N = 6;
    const auto bath = BathState::from_amplitudes(N, ref::random_state(rng, N + 1));
    const auto [fu, fd] = ref::random_qubit(rng);
    const Eigen::VectorXcd psi = oracle::embed(QubitState::validated(fu, fd), bath);

    const Eigen::Matrix4cd chi01 = oracle::reduce_bath_pair(psi, 0, 1);
    const Eigen::Matrix4cd chi25 = oracle::reduce_bath_pair(psi, 2, 5);
    const Eigen::Matrix4cd chi40 = oracle::reduce_bath_pair(psi, 4, 0);
    CHECK((chi01 - chi25).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((chi01 - chi40).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(std::abs(chi01.trace() - 1.0) < 1e-13);

    // One down flip shared by two spins is the symmetric Bell pair.
    const auto one_flip = BathState::fully_polarized(2, 1);
    const Eigen::VectorXcd small = oracle::embed(QubitState::up(), one_flip);
    const Eigen::Matrix4cd bell = oracle::reduce_bath_pair(small, 0, 1);
    Eigen::Matrix4cd expect = Eigen::Matrix4cd::Zero();
    expect(1, 1) = expect(1, 2) = expect(2, 1) = expect(2, 2) = 0.5;
    CHECK((bell - expect).cwiseAbs().maxCoeff() < 1e-14);
}

namespace {

// Maps the interleaved layout (qubit1, qubit2, bath1, bath2) onto the
// index of kron(single problem 1, single problem 2).
int kron_index(int st, int n1, int n2) {
    const int b2 = st & ((1 << n2) - 1);
    const int b1 = (st >> n2) & ((1 << n1) - 1);
    const int q2 = (st >> (n1 + n2)) & 1;
    const int q1 = (st >> (n1 + n2 + 1)) & 1;
    return ((q1 << n1) | b1) * (1 << (n2 + 1)) + ((q2 << n2) | b2);
}

}  // namespace

TEST_CASE("two decoupled problems assemble as a permuted Kronecker sum") {
    const int n1 = 2, n2 = 3;
    SingleQubitParams p1{0.9, 1.2, 0.5, n1};
    SingleQubitParams p2{1.4, 0.8, 0.0, n2};
    const Eigen::MatrixXcd H = oracle::build_full_individual(p1, p2);
    const int d1 = 1 << (n1 + 1), d2 = 1 << (n2 + 1);
    REQUIRE(H.rows() == d1 * d2);

    const Eigen::MatrixXcd K =
        Eigen::kroneckerProduct(oracle::build_full(p1),
                                Eigen::MatrixXcd::Identity(d2, d2)) +
        Eigen::kroneckerProduct(Eigen::MatrixXcd::Identity(d1, d1),
                                oracle::build_full(p2));
    double err = 0.0;
    for (int s = 0; s < d1 * d2; ++s)
        for (int sp = 0; sp < d1 * d2; ++sp)
            err = std::max(err,
                           std::abs(H(s, sp) - K(kron_index(s, n1, n2),
                                                 kron_index(sp, n1, n2))));
    CHECK(err < 1e-13);
}

TEST_CASE("individual-bath embedding splits over the two problems") {
    std::mt19937_64 rng(73);
    const int n1 = 2, n2 = 3;
    const auto bath1 = BathState::from_amplitudes(n1, ref::random_state(rng, n1 + 1));
    const auto bath2 = BathState::from_amplitudes(n2, ref::random_state(rng, n2 + 1));
    const auto bell = TwoQubitState::bell_psi_plus();

    const Eigen::VectorXcd psi = oracle::embed_individual(bell, bath1, bath2);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-13));

    const Eigen::VectorXcd ud = Eigen::kroneckerProduct(
        oracle::embed(QubitState::up(), bath1), oracle::embed(QubitState::down(), bath2));
    const Eigen::VectorXcd du = Eigen::kroneckerProduct(
        oracle::embed(QubitState::down(), bath1), oracle::embed(QubitState::up(), bath2));
    const Eigen::VectorXcd expect_kron = M_SQRT1_2 * (ud + du);

    double err = 0.0;
    for (int s = 0; s < psi.size(); ++s)
        err = std::max(err, std::abs(psi(s) - expect_kron(kron_index(s, n1, n2))));
    CHECK(err < 1e-13);
}
