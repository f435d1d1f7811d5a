#include <benchmark/benchmark.h>

#include "igmc/classifier.hpp"
#include "igmc/deep_igmc.hpp"

using namespace igmc;

namespace {

LabeledDataset blob_fixture() {
    BlobSpec spec;
    spec.per_class = 20;
    spec.seed = 3;
    return make_blobs(spec);
}

} // namespace

static void BM_TrainClassifier(benchmark::State& state) {
    const LabeledDataset data = blob_fixture();
    TrainConfig cfg;
    cfg.epochs = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.init_seed = seed++;
        benchmark::DoNotOptimize(train_classifier(data, cfg));
    }
}
BENCHMARK(BM_TrainClassifier)->Arg(5)->Arg(30);

static void BM_DeepChainStep(benchmark::State& state) {
    const LabeledDataset data = blob_fixture();
    TrainConfig cfg;
    cfg.epochs = 5;
    const std::vector<double> x{0.0, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_deep_igmc(data, x, cfg, {1, 4, 7}));
    }
    state.SetItemsProcessed(state.iterations() * 4); // trainings per run
}
BENCHMARK(BM_DeepChainStep);
