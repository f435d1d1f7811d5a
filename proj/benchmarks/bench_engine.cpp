#include <benchmark/benchmark.h>

#include "igmc/engine.hpp"

using namespace igmc;

static void BM_BernoulliChain(benchmark::State& state) {
    const SampleSet initial = SampleSet::from_binary_counts(9, 4);
    const BernoulliApproach phi;
    const auto depth = static_cast<std::size_t>(state.range(0));
    std::uint64_t stream = 0;
    for (auto _ : state) {
        RngState rng = RngState::for_stream(1, stream++);
        benchmark::DoNotOptimize(run_chain(initial, phi, depth, rng));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BernoulliChain)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_ExponentialChain(benchmark::State& state) {
    const SampleSet initial = SampleSet::constant(50, 2.0, Support::NonnegReals);
    const ExponentialApproach phi;
    const auto depth = static_cast<std::size_t>(state.range(0));
    std::uint64_t stream = 0;
    for (auto _ : state) {
        RngState rng = RngState::for_stream(1, stream++);
        benchmark::DoNotOptimize(run_chain(initial, phi, depth, rng));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ExponentialChain)->Arg(100)->Arg(1000);

static void BM_RunIgmc(benchmark::State& state) {
    const SampleSet initial = SampleSet::from_binary_counts(9, 4);
    const BernoulliApproach phi;
    const IgmcConfig config{static_cast<std::size_t>(state.range(0)), 1000, 7};
    const auto threads = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_igmc(initial, phi, config, threads));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * 1000);
}
BENCHMARK(BM_RunIgmc)->Args({1000, 1})->Args({1000, 4})->Args({1000, 8});

BENCHMARK_MAIN();
