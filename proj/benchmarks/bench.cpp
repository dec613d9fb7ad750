#include <benchmark/benchmark.h>

#include <cmath>

#include "csm/dicke.hpp"
#include "csm/individual_baths.hpp"
#include "csm/intrabath.hpp"
#include "csm/measures.hpp"
#include "csm/single_qubit.hpp"
#include "csm/two_qubit.hpp"

namespace {

using csm::BathState;

void bm_evolve_closed_form(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    csm::SingleQubitParams p{1.0, 1.0, 0.0, N};
    const auto bath = BathState::spin_coherent(N, 0.3 * M_PI, 0.0);
    const auto q0 = csm::QubitState::up();
    double t = 0.0;
    for (auto _ : state) {
        t += 0.1;
        benchmark::DoNotOptimize(csm::evolve(p, q0, bath, t));
    }
}
BENCHMARK(bm_evolve_closed_form)->Arg(20)->Arg(60);

void bm_two_qubit_rhs(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    csm::TwoQubitParams p;
    p.n_spins = N;
    p.g1p = p.g2p = 1.0;
    const auto bath = BathState::spin_coherent(N, 0.3 * M_PI, 0.0);
    std::array<Eigen::VectorXcd, 4> G;
    for (int c = 0; c < 4; ++c) {
        auto& g = G[static_cast<std::size_t>(c)];
        g.resize(N + 1);
        for (int n = 0; n <= N; ++n)
            g(n) = 0.5 * bath.gamma_for_excitation(n);
    }
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-3;
        benchmark::DoNotOptimize(csm::eom_rhs(p, t, G));
    }
}
BENCHMARK(bm_two_qubit_rhs)->Arg(20)->Arg(60);

void bm_integrate(benchmark::State& state) {
    const int N = 20;
    csm::TwoQubitParams p;
    p.n_spins = N;
    p.g1p = p.g2p = 1.0;
    const auto bath = BathState::spin_coherent(N, 0.3 * M_PI, 0.0);
    const auto q0 = csm::TwoQubitState::bell_psi_plus();
    const std::vector<double> grid{0.0, 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(csm::integrate(p, q0, bath, grid, 1e-9));
}
BENCHMARK(bm_integrate);

void bm_channel(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    csm::SingleQubitParams p{1.0, 1.0, 0.0, N};
    const auto bath = BathState::spin_coherent(N, 0.3 * M_PI, 0.0);
    double t = 0.0;
    for (auto _ : state) {
        t += 0.1;
        benchmark::DoNotOptimize(csm::channel(p, bath, t));
    }
}
BENCHMARK(bm_channel)->Arg(60);

void bm_pair_density(benchmark::State& state) {
    const int N = 60;
    csm::SingleQubitParams p{0.0, 1.0, 1.0, N};
    const auto bath = BathState::equally_weighted(N);
    const auto table = csm::evolve(p, csm::QubitState::plus(), bath, 0.7);
    const auto rho_bath = csm::bath_density(table);
    for (auto _ : state)
        benchmark::DoNotOptimize(csm::pair_density(rho_bath));
}
BENCHMARK(bm_pair_density);

void bm_concurrence(benchmark::State& state) {
    const int N = 60;
    csm::SingleQubitParams p{0.0, 1.0, 1.0, N};
    const auto bath = BathState::equally_weighted(N);
    const auto chi = csm::pair_density(
        csm::bath_density(csm::evolve(p, csm::QubitState::plus(), bath, 0.7)));
    for (auto _ : state)
        benchmark::DoNotOptimize(csm::concurrence(chi.chi));
}
BENCHMARK(bm_concurrence);

}  // namespace

BENCHMARK_MAIN();
