#include <benchmark/benchmark.h>

#include "igmc/special_functions.hpp"

using namespace igmc;

static void BM_IncompleteBeta(benchmark::State& state) {
    const double a = static_cast<double>(state.range(0));
    double x = 0.0;
    for (auto _ : state) {
        x = x < 0.98 ? x + 0.01 : 0.01;
        benchmark::DoNotOptimize(regularized_incomplete_beta(a, a + 1.0, x));
    }
}
BENCHMARK(BM_IncompleteBeta)->Arg(1)->Arg(4)->Arg(50);

static void BM_IncompleteGamma(benchmark::State& state) {
    const double s = static_cast<double>(state.range(0));
    double x = 0.0;
    for (auto _ : state) {
        x = x < 3.0 * s ? x + 0.1 : 0.1;
        benchmark::DoNotOptimize(regularized_lower_incomplete_gamma(s, x));
    }
}
BENCHMARK(BM_IncompleteGamma)->Arg(1)->Arg(4)->Arg(50);
