#include <doctest.h>

#include <cmath>
#include <memory>

#include "igmc/errors.hpp"
#include "igmc/generative.hpp"
#include "oracles.hpp"

using namespace igmc;

TEST_CASE("fit_bernoulli estimates the success fraction") {
    const SampleSet nine = SampleSet::from_binary_counts(9, 4);
    const BernoulliModel m = fit_bernoulli(nine);
    CHECK(m.probability() == 4.0 / 9.0);
    CHECK(m.mean() == nine.mean());

    const SampleSet ones = SampleSet::from_binary_counts(17, 17);
    CHECK(fit_bernoulli(ones).probability() == 1.0);

    const SampleSet coin({0.0, 1.0}, Support::Binary);
    CHECK(fit_bernoulli(coin).probability() == 0.5);
    CHECK(fit_bernoulli(coin).mean() == coin.mean());
}

TEST_CASE("fit_bernoulli error paths") {
    CHECK_THROWS_AS(fit_bernoulli(SampleSet({}, Support::Binary)), EmptySampleSet);
    // unit-interval sets are accepted only when every value is 0 or 1
    CHECK_THROWS_AS(fit_bernoulli(SampleSet({0.0, 0.5}, Support::UnitInterval)), NonBinaryValue);
    CHECK(fit_bernoulli(SampleSet({0.0, 1.0}, Support::UnitInterval)).probability() == 0.5);
}

TEST_CASE("fit_exponential matches the sample mean") {
    const SampleSet fifty = SampleSet::constant(50, 2.0, Support::NonnegReals);
    const ExponentialModel m = fit_exponential(fifty);
    CHECK(m.rate() == 0.5);
    CHECK(m.mean() == 2.0);

    const ExponentialModel single = fit_exponential(SampleSet({1.0}, Support::NonnegReals));
    CHECK(single.rate() == 1.0);

    CHECK_THROWS_AS(fit_exponential(SampleSet({}, Support::NonnegReals)), EmptySampleSet);
    CHECK_THROWS_AS(fit_exponential(SampleSet::constant(5, 0.0, Support::NonnegReals)), ZeroMean);
}

TEST_CASE("degenerate Bernoulli models are constant") {
    RngState rng(11);
    const BernoulliModel certain(1.0);
    const BernoulliModel never(0.0);
    for (int i = 0; i < 1000; ++i) {
        CHECK(certain.sample(rng) == 1.0);
        CHECK(never.sample(rng) == 0.0);
    }
}

TEST_CASE("exponential sampling hits its mean within five standard errors") {
    const ExponentialModel m(2.0);
    RngState rng(20240601);
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += m.sample(rng);
    const double avg = sum / n;
    const double band = 5.0 * 2.0 / std::sqrt(static_cast<double>(n)); // 5 * sd/sqrt(n)
    CHECK(std::fabs(avg - 2.0) < band);
}

TEST_CASE("bernoulli sampling hits its mean within five standard errors") {
    const BernoulliModel m(4.0 / 9.0);
    RngState rng(99);
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += m.sample(rng);
    const double p = 4.0 / 9.0;
    const double band = 5.0 * std::sqrt(p * (1 - p) / static_cast<double>(n));
    CHECK(std::fabs(sum / n - p) < band);
}

TEST_CASE("mean preservation holds exactly for random sample sets") {
    RngState rng(314159);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t size = 1 + rng.next_u64() % 64;

        std::vector<double> bits(size);
        for (auto& b : bits) b = rng.uniform01() < 0.5 ? 0.0 : 1.0;
        const SampleSet binary(bits, Support::Binary);
        CHECK(fit_bernoulli(binary).mean() == binary.mean());

        std::vector<double> reals(size);
        for (auto& r : reals) r = 0.01 + 10.0 * rng.uniform01();
        const SampleSet nonneg(reals, Support::NonnegReals);
        CHECK(fit_exponential(nonneg).mean() == nonneg.mean());
    }
}

TEST_CASE("fits are deterministic and support-closed") {
    RngState data_rng(8);
    std::vector<double> bits(31);
    for (auto& b : bits) b = data_rng.uniform01() < 0.3 ? 1.0 : 0.0;
    const SampleSet s(bits, Support::Binary);

    const BernoulliModel m1 = fit_bernoulli(s);
    const BernoulliModel m2 = fit_bernoulli(s);
    CHECK(m1.probability() == m2.probability());

    RngState r1(5), r2(5);
    for (int i = 0; i < 256; ++i) {
        const double y1 = m1.sample(r1);
        CHECK(y1 == m2.sample(r2)); // identical parameters -> identical stream
        CHECK((y1 == 0.0 || y1 == 1.0));
    }

    const ExponentialModel e = fit_exponential(SampleSet::constant(3, 1.5, Support::NonnegReals));
    RngState r3(5);
    for (int i = 0; i < 256; ++i) CHECK(e.sample(r3) >= 0.0);
}
