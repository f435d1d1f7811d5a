#ifndef IGMC_DEEP_IGMC_HPP
#define IGMC_DEEP_IGMC_HPP

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "igmc/classifier.hpp"
#include "igmc/dataset.hpp"
#include "igmc/engine.hpp"

namespace igmc {

// The labeled-data analogue of GenerativeApproach: train on the current
// dataset (to convergence, per the implementation's notion of it) and
// return class probabilities for the query point. Implementations may keep
// per-chain state (e.g. warm starts); each chain works on its own clone.
class ClassifierApproach {
public:
    virtual ~ClassifierApproach() = default;
    virtual std::vector<double> fit_predict(const LabeledDataset& data,
                                            std::span<const double> x,
                                            std::uint64_t init_seed) = 0;
    virtual std::unique_ptr<ClassifierApproach> clone() const = 0;
};

// Trains the feed-forward softmax classifier from scratch each call.
// With warm_start, calls after the first within a chain resume from the
// previous step's parameters instead of re-initializing; that trades
// fidelity to the fresh-init scheme for speed and is off by default.
class SoftmaxClassifierApproach final : public ClassifierApproach {
public:
    explicit SoftmaxClassifierApproach(TrainConfig cfg, bool warm_start = false);

    std::vector<double> fit_predict(const LabeledDataset& data, std::span<const double> x,
                                    std::uint64_t init_seed) override;
    std::unique_ptr<ClassifierApproach> clone() const override;

private:
    TrainConfig cfg_;
    bool warm_start_;
    std::optional<ClassifierParams> last_params_;
};

// Per-chain class frequencies. Row n holds integer label counts over the
// chain's depth_h sampled labels, so each row sums to depth_h exactly and
// mu(n,k) = counts[n][k] / depth_h is a multiple of 1/depth_h.
class ClassPosterior {
public:
    ClassPosterior(std::vector<std::vector<int>> label_counts, std::size_t depth_h,
                   int num_classes, IgmcConfig config);

    std::size_t sample_size_n() const noexcept { return counts_.size(); }
    std::size_t depth_h() const noexcept { return depth_h_; }
    int num_classes() const noexcept { return num_classes_; }
    const IgmcConfig& config() const noexcept { return config_; }

    const std::vector<std::vector<int>>& label_counts() const noexcept { return counts_; }
    int count(std::size_t n, int k) const { return counts_.at(n).at(static_cast<std::size_t>(k - 1)); }
    double mu(std::size_t n, int k) const; // k is 1-based

private:
    std::vector<std::vector<int>> counts_;
    std::size_t depth_h_;
    int num_classes_;
    IgmcConfig config_;
};

struct ClassUncertainty {
    int label = 1;
    double mean_probability = 0.0; // average of mu(.,k)
    double uncertainty = 0.0;      // 4 * population variance of mu(.,k)
};

struct UncertaintyReport {
    std::vector<ClassUncertainty> classes;
    std::size_t sample_size_n = 0;
};

// Inverse-CDF draw over a probability vector, accumulating class 1 first.
// Returns a 1-based label.
int sample_label(std::span<const double> probs, RngState& rng);

// N independent chains; chain n copies the dataset and repeats depth_h
// times: fit_predict with a seed drawn from the chain's stream, sample a
// label from the probabilities, append (x, label). Bit-identical for any
// thread count.
ClassPosterior run_deep_igmc(const LabeledDataset& data, std::span<const double> x,
                             const ClassifierApproach& phi, const IgmcConfig& config,
                             std::size_t threads = 1);

// Convenience overload running the softmax classifier approach.
ClassPosterior run_deep_igmc(const LabeledDataset& data, std::span<const double> x,
                             const TrainConfig& train, const IgmcConfig& config,
                             std::size_t threads = 1, bool warm_start = false);

// Per class: mean of mu(.,k) and 4x its population variance. Requires at
// least two chains (throws InsufficientSamples otherwise).
UncertaintyReport summarize_uncertainty(const ClassPosterior& posterior);

} // namespace igmc

#endif // IGMC_DEEP_IGMC_HPP
