#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "igmc/classifier.hpp"
#include "igmc/errors.hpp"

using namespace igmc;

namespace {

BlobSpec separable_spec() {
    BlobSpec spec;
    spec.num_classes = 2;
    spec.per_class = 20;
    spec.separation = 3.0; // six noise sigmas
    spec.sigma = 0.5;
    spec.seed = 42;
    return spec;
}

int argmax(const std::vector<double>& v) {
    return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
}

} // namespace

TEST_CASE("zero parameters predict the uniform distribution") {
    const ClassifierParams zero(3, 4, 5);
    const std::vector<double> x{0.5, -1.0, 2.0};
    const auto p = predict_proba(zero, x);
    REQUIRE(p.size() == 5);
    for (double v : p) CHECK(v == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("softmax normalizes and is shift invariant") {
    ClassifierParams params = ClassifierParams::random_init(2, 4, 3, 99);
    const std::vector<double> x{0.3, -0.7};
    const auto p = predict_proba(params, x);

    double sum = 0.0;
    for (double v : p) {
        CHECK(v > 0.0);
        CHECK(v < 1.0);
        sum += v;
    }
    CHECK(std::fabs(sum - 1.0) < 1e-9);

    // shifting every output bias shifts all logits equally
    ClassifierParams shifted = params;
    for (double& b : shifted.b2()) b += 3.75;
    const auto q = predict_proba(shifted, x);
    for (std::size_t k = 0; k < p.size(); ++k)
        CHECK(p[k] == doctest::Approx(q[k]).epsilon(1e-12));
}

TEST_CASE("dimension mismatches are rejected") {
    const ClassifierParams params(3, 4, 2);
    CHECK_THROWS_AS(predict_proba(params, std::vector<double>{1.0}), DimensionMismatch);
    CHECK_THROWS_AS(params.logits(std::vector<double>{1.0, 2.0}), DimensionMismatch);
}

TEST_CASE("analytic gradients match central finite differences") {
    const ClassifierParams params = ClassifierParams::random_init(3, 4, 3, 2024);
    const LabeledExample example{{0.4, -1.2, 0.8}, 2};

    ClassifierParams grad(3, 4, 3);
    add_example_gradient(params, example, grad);

    const double step = 1e-5;
    const LabeledDataset single({example}, 3);
    for (std::size_t i = 0; i < params.param_count(); ++i) {
        ClassifierParams plus = params;
        ClassifierParams minus = params;
        plus.at_flat(i) += step;
        minus.at_flat(i) -= step;
        const double numeric =
            (cross_entropy_loss(plus, single) - cross_entropy_loss(minus, single)) / (2 * step);
        const double analytic = grad.at_flat(i);
        const double scale = std::max({std::fabs(numeric), std::fabs(analytic), 1e-8});
        CHECK(std::fabs(numeric - analytic) / scale < 1e-4);
    }
}

TEST_CASE("training is deterministic given data and config") {
    const LabeledDataset data = make_blobs(separable_spec());
    TrainConfig cfg;
    cfg.epochs = 5;
    cfg.init_seed = 7;

    const ClassifierParams a = train_classifier(data, cfg);
    const ClassifierParams b = train_classifier(data, cfg);
    for (std::size_t i = 0; i < a.param_count(); ++i) CHECK(a.at_flat(i) == b.at_flat(i));
}

TEST_CASE("default config separates the blob fixture perfectly") {
    const BlobSpec spec = separable_spec();
    const LabeledDataset data = make_blobs(spec);
    TrainConfig cfg;
    cfg.init_seed = 1;

    const ClassifierParams params = train_classifier(data, cfg);
    int correct = 0;
    for (const auto& ex : data.examples())
        if (argmax(predict_proba(params, ex.features)) + 1 == ex.label) ++correct;
    CHECK(correct == static_cast<int>(data.size()));

    // blob centers classify confidently to their own class
    const auto p1 = predict_proba(params, blob_center(spec, 1));
    CHECK(argmax(p1) == 0);
    const auto p2 = predict_proba(params, blob_center(spec, 2));
    CHECK(argmax(p2) == 1);
}

TEST_CASE("a single example is memorized") {
    const LabeledDataset single({{{0.5, -0.25}, 2}}, 2);
    TrainConfig cfg;
    cfg.init_seed = 5;
    // one example means one update per epoch; convergence on a lone point
    // takes ~300 passes at the default learning rate
    cfg.epochs = 300;
    const ClassifierParams params = train_classifier(single, cfg);
    const auto p = predict_proba(params, std::vector<double>{0.5, -0.25});
    CHECK(p[1] > 0.9);
}

TEST_CASE("warm start resumes from given parameters") {
    const LabeledDataset data = make_blobs(separable_spec());
    TrainConfig cfg;
    cfg.epochs = 3;
    cfg.init_seed = 11;
    const ClassifierParams first = train_classifier(data, cfg);
    const ClassifierParams resumed = train_classifier(data, cfg, first);
    // resumed training moves the parameters further
    bool any_changed = false;
    for (std::size_t i = 0; i < first.param_count(); ++i)
        any_changed = any_changed || (first.at_flat(i) != resumed.at_flat(i));
    CHECK(any_changed);
}

TEST_CASE("a divergent learning rate raises NonFiniteLoss") {
    const LabeledDataset data = make_blobs(separable_spec());
    TrainConfig cfg;
    cfg.learning_rate = 1e18;
    cfg.schedule = LrSchedule::Constant;
    cfg.init_seed = 3;
    CHECK_THROWS_AS(train_classifier(data, cfg), NonFiniteLoss);
}

TEST_CASE("config validation") {
    const LabeledDataset data({{{0.0}, 1}, {{1.0}, 2}}, 2);
    TrainConfig cfg;
    cfg.epochs = 0;
    CHECK_THROWS_AS(train_classifier(data, cfg), std::invalid_argument);
    cfg = TrainConfig{};
    cfg.learning_rate = 0.0;
    CHECK_THROWS_AS(train_classifier(data, cfg), std::invalid_argument);
    cfg = TrainConfig{};
    cfg.momentum = 1.0;
    CHECK_THROWS_AS(train_classifier(data, cfg), std::invalid_argument);
    cfg = TrainConfig{};
    cfg.batch_size = 0;
    CHECK_THROWS_AS(train_classifier(data, cfg), std::invalid_argument);
}
