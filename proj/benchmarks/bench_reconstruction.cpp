#include <benchmark/benchmark.h>

#include "maxent/oracle.hpp"
#include "maxent/reconstruction.hpp"

using namespace maxent;

namespace {

MomentSequence poisson_moments(int order) {
    return oracle::reference_moments(oracle::ReferenceLaw::poisson(5.0), SupportWindow(0, 60),
                                     order);
}

void bm_minimize(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const auto mu = poisson_moments(order);
    const SupportWindow d(0, 20);
    for (auto _ : state) {
        auto solved = minimize(mu, d, SolverConfig{});
        benchmark::DoNotOptimize(solved);
    }
}
BENCHMARK(bm_minimize)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void bm_reconstruct(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const auto mu = poisson_moments(order);
    for (auto _ : state) {
        auto res = reconstruct(mu, SupportConfig{}, SolverConfig{});
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(bm_reconstruct)->Arg(1)->Arg(2)->Arg(4);

void bm_reconstruct_chebyshev(benchmark::State& state) {
    const auto mu = poisson_moments(2);
    SupportConfig scfg;
    scfg.strategy = ExtensionStrategy::chebyshev;
    for (auto _ : state) {
        auto res = reconstruct(mu, scfg, SolverConfig{});
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(bm_reconstruct_chebyshev);

void bm_grid_oracle(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const SupportWindow d(0, 20);
    const auto mu =
        oracle::reference_moments(oracle::ReferenceLaw::binomial(20, 0.3), d, order);
    for (auto _ : state) {
        auto q = oracle::grid_maxent(mu, d);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(bm_grid_oracle)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
