#include "igmc/deep_igmc.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "igmc/errors.hpp"
#include "igmc/parallel.hpp"

namespace igmc {

SoftmaxClassifierApproach::SoftmaxClassifierApproach(TrainConfig cfg, bool warm_start)
    : cfg_(std::move(cfg)), warm_start_(warm_start) {}

std::vector<double> SoftmaxClassifierApproach::fit_predict(const LabeledDataset& data,
                                                           std::span<const double> x,
                                                           std::uint64_t init_seed) {
    TrainConfig cfg = cfg_;
    cfg.init_seed = init_seed;
    if (warm_start_ && last_params_) {
        last_params_ = train_classifier(data, cfg, *last_params_);
    } else {
        last_params_ = train_classifier(data, cfg);
    }
    return predict_proba(*last_params_, x);
}

std::unique_ptr<ClassifierApproach> SoftmaxClassifierApproach::clone() const {
    return std::make_unique<SoftmaxClassifierApproach>(cfg_, warm_start_);
}

ClassPosterior::ClassPosterior(std::vector<std::vector<int>> label_counts, std::size_t depth_h,
                               int num_classes, IgmcConfig config)
    : counts_(std::move(label_counts)), depth_h_(depth_h), num_classes_(num_classes),
      config_(config) {
    if (counts_.empty()) throw std::invalid_argument("posterior needs at least one chain");
    if (depth_h_ < 1) throw std::invalid_argument("depth must be >= 1");
    for (const auto& row : counts_) {
        if (row.size() != static_cast<std::size_t>(num_classes_))
            throw DimensionMismatch("count row has wrong class count");
        std::size_t total = 0;
        for (int c : row) {
            if (c < 0) throw std::invalid_argument("negative label count");
            total += static_cast<std::size_t>(c);
        }
        if (total != depth_h_)
            throw std::invalid_argument("count row does not sum to the chain depth");
    }
}

double ClassPosterior::mu(std::size_t n, int k) const {
    return static_cast<double>(count(n, k)) / static_cast<double>(depth_h_);
}

int sample_label(std::span<const double> probs, RngState& rng) {
    if (probs.empty()) throw std::invalid_argument("empty probability vector");
    const double u = rng.uniform01();
    double cum = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        const double p = probs[k];
        if (!(p >= 0.0) || !std::isfinite(p))
            throw std::invalid_argument("probability vector has a negative or non-finite entry");
        cum += p;
        if (u < cum) return static_cast<int>(k) + 1;
    }
    return static_cast<int>(probs.size()); // u landed in the rounding slack at the top
}

ClassPosterior run_deep_igmc(const LabeledDataset& data, std::span<const double> x,
                             const ClassifierApproach& phi, const IgmcConfig& config,
                             std::size_t threads) {
    if (config.sample_size_n < 1) throw std::invalid_argument("sample_size_n must be >= 1");
    if (config.depth_h < 1) throw std::invalid_argument("depth_h must be >= 1");
    if (static_cast<int>(x.size()) != data.feature_dim())
        throw DimensionMismatch("query point has wrong feature dimension");

    const int k = data.num_classes();
    const std::vector<double> query(x.begin(), x.end());
    std::vector<std::vector<int>> counts(config.sample_size_n,
                                         std::vector<int>(static_cast<std::size_t>(k), 0));

    parallel_for_index(config.sample_size_n, threads, [&](std::size_t n) {
        RngState rng = RngState::for_stream(config.master_seed, n);
        auto approach = phi.clone();
        LabeledDataset chain_data = data;
        auto& row = counts[n];
        for (std::size_t h = 0; h < config.depth_h; ++h) {
            const std::uint64_t init_seed = rng.next_u64();
            const std::vector<double> probs = approach->fit_predict(chain_data, query, init_seed);
            if (probs.size() != static_cast<std::size_t>(k))
                throw DimensionMismatch("approach returned wrong number of class probabilities");
            const int label = sample_label(probs, rng);
            ++row[static_cast<std::size_t>(label - 1)];
            chain_data.append(query, label);
        }
    });

    return ClassPosterior(std::move(counts), config.depth_h, k, config);
}

ClassPosterior run_deep_igmc(const LabeledDataset& data, std::span<const double> x,
                             const TrainConfig& train, const IgmcConfig& config,
                             std::size_t threads, bool warm_start) {
    SoftmaxClassifierApproach approach(train, warm_start);
    return run_deep_igmc(data, x, approach, config, threads);
}

UncertaintyReport summarize_uncertainty(const ClassPosterior& posterior) {
    const std::size_t n = posterior.sample_size_n();
    if (n < 2) throw InsufficientSamples("uncertainty needs at least two chains");

    UncertaintyReport report;
    report.sample_size_n = n;
    report.classes.reserve(static_cast<std::size_t>(posterior.num_classes()));
    for (int k = 1; k <= posterior.num_classes(); ++k) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += posterior.mu(i, k);
        mean /= static_cast<double>(n);

        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = posterior.mu(i, k) - mean;
            var += d * d;
        }
        var /= static_cast<double>(n); // population variance

        report.classes.push_back(ClassUncertainty{k, mean, 4.0 * var});
    }
    return report;
}

} // namespace igmc
