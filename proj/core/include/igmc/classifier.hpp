#ifndef IGMC_CLASSIFIER_HPP
#define IGMC_CLASSIFIER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "igmc/dataset.hpp"
#include "igmc/rng.hpp"

namespace igmc {

enum class LrSchedule { Constant, Cosine };

struct TrainConfig {
    int epochs = 30;
    double learning_rate = 0.002;
    double momentum = 0.9;
    LrSchedule schedule = LrSchedule::Cosine;
    int batch_size = 1;
    int hidden_width = 16;
    std::uint64_t init_seed = 0;
};

// Feed-forward softmax classifier: input d -> hidden w (ReLU) -> K logits.
// Weights row-major: w1 is (w x d), w2 is (K x w).
class ClassifierParams {
public:
    ClassifierParams(int input_dim, int hidden_width, int num_classes); // zeros

    // Per-layer uniform init on [-1/sqrt(fan_in), +1/sqrt(fan_in)], drawn
    // in a fixed order (w1 row-major, b1, w2 row-major, b2).
    static ClassifierParams random_init(int input_dim, int hidden_width,
                                        int num_classes, std::uint64_t seed);

    int input_dim() const noexcept { return input_dim_; }
    int hidden_width() const noexcept { return hidden_width_; }
    int num_classes() const noexcept { return num_classes_; }

    std::vector<double>& w1() noexcept { return w1_; }
    std::vector<double>& b1() noexcept { return b1_; }
    std::vector<double>& w2() noexcept { return w2_; }
    std::vector<double>& b2() noexcept { return b2_; }
    const std::vector<double>& w1() const noexcept { return w1_; }
    const std::vector<double>& b1() const noexcept { return b1_; }
    const std::vector<double>& w2() const noexcept { return w2_; }
    const std::vector<double>& b2() const noexcept { return b2_; }

    // Flat view over all parameters, w1 | b1 | w2 | b2; used by SGD and
    // the finite-difference gradient check.
    std::size_t param_count() const noexcept;
    double& at_flat(std::size_t i);
    double at_flat(std::size_t i) const;

    std::vector<double> logits(std::span<const double> x) const;

private:
    int input_dim_;
    int hidden_width_;
    int num_classes_;
    std::vector<double> w1_, b1_, w2_, b2_;
};

// Softmax of the logits; sums to 1 within 1e-9 and each entry in (0,1).
// Throws DimensionMismatch when x has the wrong length.
std::vector<double> predict_proba(const ClassifierParams& params, std::span<const double> x);

// Mean cross-entropy of the dataset under the parameters.
double cross_entropy_loss(const ClassifierParams& params, const LabeledDataset& data);

// Adds d(example loss)/d(param) into `grad` (same shape as `params`) and
// returns the example's cross-entropy loss.
double add_example_gradient(const ClassifierParams& params, const LabeledExample& example,
                            ClassifierParams& grad);

// Mini-batch SGD with momentum from a fresh random initialization seeded
// by cfg.init_seed. Runs exactly cfg.epochs epochs; deterministic given
// (data, cfg). Throws NonFiniteLoss if the epoch loss stops being finite.
ClassifierParams train_classifier(const LabeledDataset& data, const TrainConfig& cfg);

// Same, but starting from `warm_start` instead of a fresh initialization.
ClassifierParams train_classifier(const LabeledDataset& data, const TrainConfig& cfg,
                                  const ClassifierParams& warm_start);

} // namespace igmc

#endif // IGMC_CLASSIFIER_HPP
