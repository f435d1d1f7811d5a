#include <benchmark/benchmark.h>

#include "igmc/engine.hpp"
#include "igmc/metrics.hpp"
#include "igmc/reference_cdf.hpp"

using namespace igmc;

namespace {

EmpiricalCdf posterior_fixture(std::size_t n) {
    const SampleSet initial = SampleSet::from_binary_counts(9, 4);
    return posterior_cdf(run_igmc(initial, BernoulliApproach{}, {n, 200, 5}));
}

} // namespace

static void BM_L1StepStep(benchmark::State& state) {
    const EmpiricalCdf f = posterior_fixture(static_cast<std::size_t>(state.range(0)));
    const EmpiricalCdf g = posterior_fixture(static_cast<std::size_t>(state.range(0)) + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(l1_distance(f, g, {0.0, 1.0}));
    }
}
BENCHMARK(BM_L1StepStep)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_L1StepRef(benchmark::State& state) {
    const EmpiricalCdf f = posterior_fixture(static_cast<std::size_t>(state.range(0)));
    const BetaRef ref(4.0, 5.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(l1_distance(f, ref, {0.0, 1.0}));
    }
}
BENCHMARK(BM_L1StepRef)->Arg(100)->Arg(1000);

static void BM_KsStepRef(benchmark::State& state) {
    const EmpiricalCdf f = posterior_fixture(static_cast<std::size_t>(state.range(0)));
    const BetaRef ref(4.0, 5.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ks_distance(f, ref));
    }
}
BENCHMARK(BM_KsStepRef)->Arg(100)->Arg(1000);
