#ifndef IGMC_GENERATIVE_HPP
#define IGMC_GENERATIVE_HPP

#include <memory>
#include <string_view>

#include "igmc/rng.hpp"
#include "igmc/sample_set.hpp"

namespace igmc {

// A fitted, samplable distribution. mean() is the exact analytic mean of
// the fitted distribution, not a Monte Carlo estimate.
class GenerativeModel {
public:
    virtual ~GenerativeModel() = default;
    virtual double sample(RngState& rng) const = 0;
    virtual double mean() const noexcept = 0;
    virtual Support support() const noexcept = 0;
};

class BernoulliModel final : public GenerativeModel {
public:
    explicit BernoulliModel(double probability);

    double probability() const noexcept { return probability_; }
    double sample(RngState& rng) const override;
    double mean() const noexcept override { return probability_; }
    Support support() const noexcept override { return Support::Binary; }

private:
    double probability_;
};

class ExponentialModel final : public GenerativeModel {
public:
    // Fitted by its mean; rate() reports 1/mean. mean() returns the stored
    // mean so moment-matched fits preserve the sample mean exactly, without
    // the 1/(1/m) double rounding.
    explicit ExponentialModel(double mean);

    double rate() const noexcept { return rate_; }
    double sample(RngState& rng) const override; // inverse transform -log(u)/rate, u in (0,1]
    double mean() const noexcept override { return mean_; }
    Support support() const noexcept override { return Support::NonnegReals; }

private:
    double mean_;
    double rate_;
};

// Moment-matching fits. Both recompute their parameter from the full
// current contents of the set, generated values included, and both are
// mean-preserving: fit(s).mean() == s.mean() exactly.
BernoulliModel fit_bernoulli(const SampleSet& s);
ExponentialModel fit_exponential(const SampleSet& s);

// The rule mapping any sample set to a fitted model. Implementations must
// be deterministic: fitting the same set twice yields identical parameters.
class GenerativeApproach {
public:
    virtual ~GenerativeApproach() = default;
    virtual std::unique_ptr<GenerativeModel> fit(const SampleSet& s) const = 0;
    virtual std::string_view name() const noexcept = 0;
};

class BernoulliApproach final : public GenerativeApproach {
public:
    std::unique_ptr<GenerativeModel> fit(const SampleSet& s) const override;
    std::string_view name() const noexcept override { return "bernoulli"; }
};

class ExponentialApproach final : public GenerativeApproach {
public:
    std::unique_ptr<GenerativeModel> fit(const SampleSet& s) const override;
    std::string_view name() const noexcept override { return "exponential"; }
};

} // namespace igmc

#endif // IGMC_GENERATIVE_HPP
