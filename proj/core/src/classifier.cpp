#include "igmc/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "igmc/errors.hpp"

namespace igmc {

namespace {

void validate_config(const TrainConfig& cfg) {
    if (cfg.epochs < 1) throw std::invalid_argument("epochs must be >= 1");
    if (!(cfg.learning_rate > 0.0)) throw std::invalid_argument("learning rate must be positive");
    if (!(cfg.momentum >= 0.0 && cfg.momentum < 1.0))
        throw std::invalid_argument("momentum must lie in [0,1)");
    if (cfg.batch_size < 1) throw std::invalid_argument("batch size must be >= 1");
    if (cfg.hidden_width < 1) throw std::invalid_argument("hidden width must be >= 1");
}

double epoch_learning_rate(const TrainConfig& cfg, int epoch) {
    if (cfg.schedule == LrSchedule::Constant) return cfg.learning_rate;
    return cfg.learning_rate * 0.5 *
           (1.0 + std::cos(std::numbers::pi * epoch / static_cast<double>(cfg.epochs)));
}

// In-place Fisher-Yates with a fixed draw rule, so shuffles reproduce
// across platforms (std::shuffle is implementation-defined).
void shuffle_indices(std::vector<std::size_t>& idx, RngState& rng) {
    for (std::size_t i = idx.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_u64() % i);
        std::swap(idx[i - 1], idx[j]);
    }
}

struct Forward {
    std::vector<double> z1;     // pre-activation hidden
    std::vector<double> hidden; // relu(z1)
    std::vector<double> logits;
    std::vector<double> probs;  // softmax of logits
};

Forward forward_pass(const ClassifierParams& p, std::span<const double> x) {
    const int d = p.input_dim();
    const int w = p.hidden_width();
    const int k = p.num_classes();

    Forward f;
    f.z1.resize(static_cast<std::size_t>(w));
    f.hidden.resize(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) {
        double z = p.b1()[static_cast<std::size_t>(i)];
        const double* row = p.w1().data() + static_cast<std::size_t>(i) * d;
        for (int j = 0; j < d; ++j) z += row[j] * x[static_cast<std::size_t>(j)];
        f.z1[static_cast<std::size_t>(i)] = z;
        f.hidden[static_cast<std::size_t>(i)] = z > 0.0 ? z : 0.0;
    }

    f.logits.resize(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
        double z = p.b2()[static_cast<std::size_t>(c)];
        const double* row = p.w2().data() + static_cast<std::size_t>(c) * w;
        for (int i = 0; i < w; ++i) z += row[i] * f.hidden[static_cast<std::size_t>(i)];
        f.logits[static_cast<std::size_t>(c)] = z;
    }

    const double zmax = *std::max_element(f.logits.begin(), f.logits.end());
    double norm = 0.0;
    f.probs.resize(f.logits.size());
    for (std::size_t c = 0; c < f.logits.size(); ++c) {
        f.probs[c] = std::exp(f.logits[c] - zmax);
        norm += f.probs[c];
    }
    for (double& v : f.probs) v /= norm;
    return f;
}

} // namespace

ClassifierParams::ClassifierParams(int input_dim, int hidden_width, int num_classes)
    : input_dim_(input_dim), hidden_width_(hidden_width), num_classes_(num_classes) {
    if (input_dim < 1 || hidden_width < 1 || num_classes < 2)
        throw std::invalid_argument("classifier needs d >= 1, w >= 1, K >= 2");
    w1_.assign(static_cast<std::size_t>(hidden_width) * input_dim, 0.0);
    b1_.assign(static_cast<std::size_t>(hidden_width), 0.0);
    w2_.assign(static_cast<std::size_t>(num_classes) * hidden_width, 0.0);
    b2_.assign(static_cast<std::size_t>(num_classes), 0.0);
}

ClassifierParams ClassifierParams::random_init(int input_dim, int hidden_width,
                                               int num_classes, std::uint64_t seed) {
    ClassifierParams p(input_dim, hidden_width, num_classes);
    RngState rng(seed);
    const double bound1 = 1.0 / std::sqrt(static_cast<double>(input_dim));
    const double bound2 = 1.0 / std::sqrt(static_cast<double>(hidden_width));
    auto draw = [&rng](double bound) { return (2.0 * rng.uniform01() - 1.0) * bound; };
    for (double& v : p.w1_) v = draw(bound1);
    for (double& v : p.b1_) v = draw(bound1);
    for (double& v : p.w2_) v = draw(bound2);
    for (double& v : p.b2_) v = draw(bound2);
    return p;
}

std::size_t ClassifierParams::param_count() const noexcept {
    return w1_.size() + b1_.size() + w2_.size() + b2_.size();
}

double& ClassifierParams::at_flat(std::size_t i) {
    if (i < w1_.size()) return w1_[i];
    i -= w1_.size();
    if (i < b1_.size()) return b1_[i];
    i -= b1_.size();
    if (i < w2_.size()) return w2_[i];
    i -= w2_.size();
    return b2_.at(i);
}

double ClassifierParams::at_flat(std::size_t i) const {
    return const_cast<ClassifierParams*>(this)->at_flat(i);
}

std::vector<double> ClassifierParams::logits(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != input_dim_)
        throw DimensionMismatch("input has wrong feature dimension");
    return forward_pass(*this, x).logits;
}

std::vector<double> predict_proba(const ClassifierParams& params, std::span<const double> x) {
    if (static_cast<int>(x.size()) != params.input_dim())
        throw DimensionMismatch("input has wrong feature dimension");
    return forward_pass(params, x).probs;
}

double cross_entropy_loss(const ClassifierParams& params, const LabeledDataset& data) {
    double total = 0.0;
    for (const auto& ex : data.examples()) {
        const Forward f = forward_pass(params, ex.features);
        const double p = f.probs[static_cast<std::size_t>(ex.label - 1)];
        total += -std::log(std::max(p, 1e-300));
    }
    return total / static_cast<double>(data.size());
}

double add_example_gradient(const ClassifierParams& params, const LabeledExample& example,
                            ClassifierParams& grad) {
    const int d = params.input_dim();
    const int w = params.hidden_width();
    const int k = params.num_classes();
    const Forward f = forward_pass(params, example.features);

    // d(loss)/d(logit_c) = p_c - [c == label]
    std::vector<double> dlogits(f.probs);
    dlogits[static_cast<std::size_t>(example.label - 1)] -= 1.0;

    std::vector<double> dhidden(static_cast<std::size_t>(w), 0.0);
    for (int c = 0; c < k; ++c) {
        const double dz = dlogits[static_cast<std::size_t>(c)];
        double* grow = grad.w2().data() + static_cast<std::size_t>(c) * w;
        const double* prow = params.w2().data() + static_cast<std::size_t>(c) * w;
        for (int i = 0; i < w; ++i) {
            grow[i] += dz * f.hidden[static_cast<std::size_t>(i)];
            dhidden[static_cast<std::size_t>(i)] += dz * prow[i];
        }
        grad.b2()[static_cast<std::size_t>(c)] += dz;
    }

    for (int i = 0; i < w; ++i) {
        if (f.z1[static_cast<std::size_t>(i)] <= 0.0) continue; // relu gate
        const double dz = dhidden[static_cast<std::size_t>(i)];
        double* grow = grad.w1().data() + static_cast<std::size_t>(i) * d;
        for (int j = 0; j < d; ++j) grow[j] += dz * example.features[static_cast<std::size_t>(j)];
        grad.b1()[static_cast<std::size_t>(i)] += dz;
    }

    return -std::log(std::max(f.probs[static_cast<std::size_t>(example.label - 1)], 1e-300));
}

namespace {

ClassifierParams train_impl(const LabeledDataset& data, const TrainConfig& cfg,
                            const ClassifierParams* warm_start) {
    validate_config(cfg);
    ClassifierParams params =
        warm_start ? *warm_start
                   : ClassifierParams::random_init(data.feature_dim(), cfg.hidden_width,
                                                   data.num_classes(),
                                                   stream_seed(cfg.init_seed, 0));
    if (warm_start && (warm_start->input_dim() != data.feature_dim() ||
                       warm_start->num_classes() != data.num_classes()))
        throw DimensionMismatch("warm-start parameters do not match the dataset");

    ClassifierParams velocity(params.input_dim(), params.hidden_width(), params.num_classes());
    ClassifierParams grad(params.input_dim(), params.hidden_width(), params.num_classes());
    RngState shuffle_rng = RngState::for_stream(cfg.init_seed, 1);

    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const std::size_t count = params.param_count();

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        const double lr = epoch_learning_rate(cfg, epoch);
        shuffle_indices(order, shuffle_rng);

        double epoch_loss = 0.0;
        for (std::size_t start = 0; start < order.size();
             start += static_cast<std::size_t>(cfg.batch_size)) {
            const std::size_t stop =
                std::min(order.size(), start + static_cast<std::size_t>(cfg.batch_size));
            for (std::size_t i = 0; i < count; ++i) grad.at_flat(i) = 0.0;
            for (std::size_t i = start; i < stop; ++i) {
                const auto& ex = data.examples()[order[i]];
                epoch_loss += add_example_gradient(params, ex, grad);
            }
            const double scale = 1.0 / static_cast<double>(stop - start);
            for (std::size_t i = 0; i < count; ++i) {
                double& v = velocity.at_flat(i);
                v = cfg.momentum * v - lr * scale * grad.at_flat(i);
                params.at_flat(i) += v;
            }
        }
        if (!std::isfinite(epoch_loss))
            throw NonFiniteLoss("training loss diverged at epoch " + std::to_string(epoch));
    }
    return params;
}

} // namespace

ClassifierParams train_classifier(const LabeledDataset& data, const TrainConfig& cfg) {
    return train_impl(data, cfg, nullptr);
}

ClassifierParams train_classifier(const LabeledDataset& data, const TrainConfig& cfg,
                                  const ClassifierParams& warm_start) {
    return train_impl(data, cfg, &warm_start);
}

} // namespace igmc
