#include "igmc/generative.hpp"

#include <cmath>
#include <string>

#include "igmc/errors.hpp"

namespace igmc {

BernoulliModel::BernoulliModel(double probability) : probability_(probability) {
    if (!(probability >= 0.0 && probability <= 1.0))
        throw ParameterOutOfRange("Bernoulli probability must lie in [0,1]");
}

double BernoulliModel::sample(RngState& rng) const {
    return rng.uniform01() < probability_ ? 1.0 : 0.0;
}

ExponentialModel::ExponentialModel(double mean) : mean_(mean), rate_(1.0 / mean) {
    if (!(mean > 0.0) || !std::isfinite(mean))
        throw ParameterOutOfRange("Exponential mean must be positive and finite");
}

double ExponentialModel::sample(RngState& rng) const {
    return -std::log(rng.uniform_open0()) / rate_;
}

BernoulliModel fit_bernoulli(const SampleSet& s) {
    if (s.empty()) throw EmptySampleSet("fit_bernoulli on an empty sample set");
    double ones = 0.0;
    if (s.support() == Support::Binary) {
        ones = s.sum(); // binary invariant: sum counts the ones
    } else {
        for (double v : s.values()) {
            if (v != 0.0 && v != 1.0)
                throw NonBinaryValue("fit_bernoulli requires values in {0,1}, got " +
                                     std::to_string(v));
            ones += v;
        }
    }
    return BernoulliModel(ones / static_cast<double>(s.size()));
}

ExponentialModel fit_exponential(const SampleSet& s) {
    if (s.empty()) throw EmptySampleSet("fit_exponential on an empty sample set");
    const double mean = s.mean();
    if (!(mean > 0.0)) throw ZeroMean("fit_exponential: sample mean is zero, rate undefined");
    return ExponentialModel(mean);
}

std::unique_ptr<GenerativeModel> BernoulliApproach::fit(const SampleSet& s) const {
    return std::make_unique<BernoulliModel>(fit_bernoulli(s));
}

std::unique_ptr<GenerativeModel> ExponentialApproach::fit(const SampleSet& s) const {
    return std::make_unique<ExponentialModel>(fit_exponential(s));
}

} // namespace igmc
