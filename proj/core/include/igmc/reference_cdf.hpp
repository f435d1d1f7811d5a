#ifndef IGMC_REFERENCE_CDF_HPP
#define IGMC_REFERENCE_CDF_HPP

#include "igmc/ecdf.hpp"

namespace igmc {

// Analytic CDF used as a comparison target. eval is nondecreasing,
// continuous on the support, and clamped to [0,1].
class ReferenceCdf {
public:
    virtual ~ReferenceCdf() = default;
    virtual double eval(double t) const = 0;
    virtual Interval domain() const noexcept = 0;
};

class BetaRef final : public ReferenceCdf {
public:
    BetaRef(double alpha, double beta); // both > 0

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double eval(double t) const override;
    Interval domain() const noexcept override { return {0.0, 1.0}; }

private:
    double alpha_;
    double beta_;
};

class GammaRef final : public ReferenceCdf {
public:
    GammaRef(double shape, double rate); // both > 0

    double shape() const noexcept { return shape_; }
    double rate() const noexcept { return rate_; }
    double eval(double t) const override;
    Interval domain() const noexcept override;

private:
    double shape_;
    double rate_;
};

class ExponentialRef final : public ReferenceCdf {
public:
    explicit ExponentialRef(double rate);

    double rate() const noexcept { return rate_; }
    double eval(double t) const override;
    Interval domain() const noexcept override;

private:
    double rate_;
};

class UniformRef final : public ReferenceCdf {
public:
    UniformRef(double lo, double hi);

    double eval(double t) const override;
    Interval domain() const noexcept override { return {lo_, hi_}; }

private:
    double lo_;
    double hi_;
};

// Lomax(shape, scale): F(t) = 1 - (1 + t/scale)^(-shape) on [0, inf).
class LomaxRef final : public ReferenceCdf {
public:
    LomaxRef(double shape, double scale);

    double shape() const noexcept { return shape_; }
    double scale() const noexcept { return scale_; }
    double eval(double t) const override;
    Interval domain() const noexcept override;

private:
    double shape_;
    double scale_;
};

// Two-step CDF of Bern(p): 1-p at 0, 1 at 1. A step function, so it is
// returned as an EmpiricalCdf rather than a (continuous) ReferenceCdf.
EmpiricalCdf bernoulli_step_cdf(double p);

// Smallest t with ref.eval(t) >= p, by bracketing + bisection.
double quantile(const ReferenceCdf& ref, double p);

} // namespace igmc

#endif // IGMC_REFERENCE_CDF_HPP
