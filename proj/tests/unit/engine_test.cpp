#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "igmc/engine.hpp"
#include "igmc/errors.hpp"
#include "oracles.hpp"

using namespace igmc;

namespace {

// Minimal external implementation of the approach contract: the fitted
// model is a point mass at the current sample mean.
class ConstantApproach final : public GenerativeApproach {
public:
    std::unique_ptr<GenerativeModel> fit(const SampleSet& s) const override {
        class ConstantModel final : public GenerativeModel {
        public:
            ConstantModel(double v, Support sup) : value_(v), support_(sup) {}
            double sample(RngState&) const override { return value_; }
            double mean() const noexcept override { return value_; }
            Support support() const noexcept override { return support_; }

        private:
            double value_;
            Support support_;
        };
        return std::make_unique<ConstantModel>(s.mean(), s.support());
    }
    std::string_view name() const noexcept override { return "constant"; }
};

} // namespace

TEST_CASE("run_chain appends exactly H values and leaves the input alone") {
    const SampleSet nine = SampleSet::from_binary_counts(9, 4);
    const BernoulliApproach phi;

    RngState rng = RngState::for_stream(1, 0);
    const double mu = run_chain(nine, phi, 1, rng);
    CHECK((mu == 4.0 / 10.0 || mu == 5.0 / 10.0));
    CHECK(nine.size() == 9); // caller's copy untouched
}

TEST_CASE("all-ones chains are absorbing") {
    const SampleSet ones = SampleSet::from_binary_counts(5, 5);
    const BernoulliApproach phi;
    RngState rng(99);
    CHECK(run_chain(ones, phi, 200, rng) == 1.0);
}

TEST_CASE("a forced y1=1 draw gives mu = 2/3 on the {0,1} set") {
    // find a seed whose first uniform lands below p = 1/2 (draw == 1)
    std::uint64_t seed = 0;
    for (;; ++seed) {
        RngState probe(seed);
        if (probe.uniform01() < 0.5) break;
    }
    const SampleSet coin({0.0, 1.0}, Support::Binary);
    RngState rng(seed);
    CHECK(run_chain(coin, BernoulliApproach{}, 1, rng) == 2.0 / 3.0);
}

TEST_CASE("chain state tracks running sums and step counts") {
    ChainState state(SampleSet::from_binary_counts(9, 4));
    CHECK(state.steps_taken() == 0);
    CHECK(state.running_mean() == 4.0 / 9.0);

    const BernoulliApproach phi;
    RngState rng(3);
    state.step(phi, rng);
    CHECK(state.steps_taken() == 1);
    CHECK(state.working_set().size() == 10);
    CHECK(state.running_sum() == state.working_set().sum());
}

TEST_CASE("bounded increments: |Z_k - Z_{k-1}| <= 2/(k+M) on unit support") {
    const std::size_t m = 9;
    ChainState state(SampleSet::from_binary_counts(m, 4));
    RngState rng = RngState::for_stream(123, 0);
    const BernoulliApproach phi;
    double prev = state.running_mean();
    for (std::size_t k = 1; k <= 1000; ++k) {
        state.step(phi, rng);
        const double z = state.running_mean();
        CHECK(std::fabs(z - prev) <= 2.0 / static_cast<double>(k + m));
        CHECK(z >= 0.0);
        CHECK(z <= 1.0);
        prev = z;
    }
}

TEST_CASE("single-step extensions average back to the current mean") {
    const SampleSet fixed = SampleSet::from_binary_counts(9, 4);
    const BernoulliApproach phi;
    const double z0 = fixed.mean();
    const int repeats = 10000;

    std::vector<double> z1(repeats);
    for (int r = 0; r < repeats; ++r) {
        RngState rng = RngState::for_stream(31337, static_cast<std::uint64_t>(r));
        ChainState state(fixed);
        state.step(phi, rng);
        z1[static_cast<std::size_t>(r)] = state.running_mean();
    }
    const double avg = igmc::testing::mean_of(z1);
    const double se = igmc::testing::sample_std(z1) / std::sqrt(static_cast<double>(repeats));
    CHECK(std::fabs(avg - z0) < 5.0 * se);
}

TEST_CASE("run_igmc on an all-ones set returns all-ones draws") {
    const PosteriorSamples out =
        run_igmc(SampleSet::from_binary_counts(4, 4), BernoulliApproach{}, {3, 10, 7});
    REQUIRE(out.mus.size() == 3);
    for (double mu : out.mus) CHECK(mu == 1.0);
    CHECK(out.initial_m == 4);
}

TEST_CASE("posterior draws center on the initial mean") {
    const IgmcConfig config{10000, 100, 2024};
    const PosteriorSamples out =
        run_igmc(SampleSet::from_binary_counts(9, 4), BernoulliApproach{}, config, 4);
    const double avg = igmc::testing::mean_of(out.mus);
    const double se =
        igmc::testing::sample_std(out.mus) / std::sqrt(static_cast<double>(out.mus.size()));
    CHECK(std::fabs(avg - 4.0 / 9.0) < 5.0 * se);
}

TEST_CASE("identical configs reproduce bit-identical draws") {
    const SampleSet nine = SampleSet::from_binary_counts(9, 4);
    const IgmcConfig config{64, 50, 555};
    const auto a = run_igmc(nine, BernoulliApproach{}, config);
    const auto b = run_igmc(nine, BernoulliApproach{}, config);
    CHECK(a.mus == b.mus);
}

TEST_CASE("thread count does not change the result") {
    const SampleSet nine = SampleSet::from_binary_counts(9, 4);
    const IgmcConfig config{64, 50, 321};
    const auto seq = run_igmc(nine, BernoulliApproach{}, config, 1);
    const auto par = run_igmc(nine, BernoulliApproach{}, config, 8);
    CHECK(seq.mus == par.mus);

    const SampleSet fifty = SampleSet::constant(50, 2.0, Support::NonnegReals);
    const auto eseq = run_igmc(fifty, ExponentialApproach{}, config, 1);
    const auto epar = run_igmc(fifty, ExponentialApproach{}, config, 8);
    CHECK(eseq.mus == epar.mus);
}

TEST_CASE("paired chains are uncorrelated across master seeds") {
    const SampleSet nine = SampleSet::from_binary_counts(9, 4);
    const BernoulliApproach phi;
    const int pairs = 10000;
    std::vector<double> first(pairs), second(pairs);
    for (int j = 0; j < pairs; ++j) {
        const std::uint64_t master = stream_seed(777, static_cast<std::uint64_t>(j));
        RngState r0 = RngState::for_stream(master, 0);
        RngState r1 = RngState::for_stream(master, 1);
        first[static_cast<std::size_t>(j)] = run_chain(nine, phi, 20, r0);
        second[static_cast<std::size_t>(j)] = run_chain(nine, phi, 20, r1);
    }
    CHECK(std::fabs(igmc::testing::pearson_correlation(first, second)) < 0.05);
}

TEST_CASE("external approach implementations plug into the engine") {
    const SampleSet s({0.5, 0.5, 0.5}, Support::UnitInterval);
    const auto out = run_igmc(s, ConstantApproach{}, {4, 25, 9});
    for (double mu : out.mus) CHECK(mu == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("config bounds are enforced") {
    const SampleSet nine = SampleSet::from_binary_counts(9, 4);
    const BernoulliApproach phi;
    RngState rng(1);
    CHECK_THROWS_AS(run_chain(nine, phi, 0, rng), std::invalid_argument);
    CHECK_THROWS_AS(run_igmc(nine, phi, {0, 10, 1}), std::invalid_argument);
    CHECK_THROWS_AS(run_igmc(nine, phi, {10, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ChainState(SampleSet({}, Support::Binary)), EmptySampleSet);
}

TEST_CASE("fit errors propagate out of run_igmc") {
    const SampleSet zeros = SampleSet::constant(5, 0.0, Support::NonnegReals);
    CHECK_THROWS_AS(run_igmc(zeros, ExponentialApproach{}, {4, 5, 1}), ZeroMean);
    CHECK_THROWS_AS(run_igmc(zeros, ExponentialApproach{}, {4, 5, 1}, 4), ZeroMean);
}

TEST_CASE("posterior_cdf follows the <= convention") {
    PosteriorSamples one{{0.5}, {1, 1, 0}, 1};
    const EmpiricalCdf f1 = posterior_cdf(one);
    CHECK(f1.eval(0.5) == 1.0);
    CHECK(f1.eval(0.4999) == 0.0);

    PosteriorSamples three{{0.2, 0.5, 0.8}, {3, 1, 0}, 1};
    const EmpiricalCdf f3 = posterior_cdf(three);
    CHECK(f3.eval(0.5) == doctest::Approx(2.0 / 3.0));
    CHECK(f3.eval(0.1) == 0.0);
    CHECK(f3.eval(0.8) == 1.0);
    CHECK(f3.eval(2.0) == 1.0);
}

TEST_CASE("posterior cdf is a right-continuous nondecreasing step function") {
    const auto out = run_igmc(SampleSet::from_binary_counts(9, 4), BernoulliApproach{},
                              {200, 30, 808});
    const EmpiricalCdf f = posterior_cdf(out);
    CHECK(f.eval(f.min_breakpoint() - 1e-12) == 0.0);
    CHECK(f.eval(f.max_breakpoint()) == 1.0);
    double prev = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double t = i / 1000.0;
        const double v = f.eval(t);
        CHECK(v >= prev);
        prev = v;
    }
    // right-continuity at each jump
    for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
        const double b = f.breakpoints()[i];
        CHECK(f.eval(b) == f.cumulative()[i]);
        CHECK(f.eval(std::nextafter(b, -1.0)) < f.cumulative()[i]);
    }
}
