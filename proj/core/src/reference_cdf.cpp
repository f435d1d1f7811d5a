#include "igmc/reference_cdf.hpp"

#include <cmath>
#include <limits>

#include "igmc/errors.hpp"
#include "igmc/special_functions.hpp"

namespace igmc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0)
        throw ParameterOutOfRange(std::string(what) + " must be positive and finite");
}

void require_not_nan(double t) {
    if (std::isnan(t)) throw ParameterOutOfRange("CDF evaluation point is NaN");
}

} // namespace

BetaRef::BetaRef(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    require_positive(alpha, "Beta alpha");
    require_positive(beta, "Beta beta");
}

double BetaRef::eval(double t) const {
    require_not_nan(t);
    return regularized_incomplete_beta(alpha_, beta_, t);
}

GammaRef::GammaRef(double shape, double rate) : shape_(shape), rate_(rate) {
    require_positive(shape, "Gamma shape");
    require_positive(rate, "Gamma rate");
}

double GammaRef::eval(double t) const {
    require_not_nan(t);
    if (t <= 0.0) return 0.0;
    return regularized_lower_incomplete_gamma(shape_, rate_ * t);
}

Interval GammaRef::domain() const noexcept { return {0.0, kInf}; }

ExponentialRef::ExponentialRef(double rate) : rate_(rate) {
    require_positive(rate, "Exponential rate");
}

double ExponentialRef::eval(double t) const {
    require_not_nan(t);
    if (t <= 0.0) return 0.0;
    return -std::expm1(-rate_ * t);
}

Interval ExponentialRef::domain() const noexcept { return {0.0, kInf}; }

UniformRef::UniformRef(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw ParameterOutOfRange("Uniform bounds must be finite with lo < hi");
}

double UniformRef::eval(double t) const {
    require_not_nan(t);
    if (t <= lo_) return 0.0;
    if (t >= hi_) return 1.0;
    return (t - lo_) / (hi_ - lo_);
}

LomaxRef::LomaxRef(double shape, double scale) : shape_(shape), scale_(scale) {
    require_positive(shape, "Lomax shape");
    require_positive(scale, "Lomax scale");
}

double LomaxRef::eval(double t) const {
    require_not_nan(t);
    if (t <= 0.0) return 0.0;
    return -std::expm1(-shape_ * std::log1p(t / scale_));
}

Interval LomaxRef::domain() const noexcept { return {0.0, kInf}; }

EmpiricalCdf bernoulli_step_cdf(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterOutOfRange("Bernoulli p must lie in [0,1]");
    if (p == 0.0) return EmpiricalCdf({0.0}, {1.0});
    if (p == 1.0) return EmpiricalCdf({1.0}, {1.0});
    return EmpiricalCdf({0.0, 1.0}, {1.0 - p, 1.0});
}

double quantile(const ReferenceCdf& ref, double p) {
    if (!(p > 0.0 && p < 1.0)) throw ParameterOutOfRange("quantile level must lie in (0,1)");
    const Interval dom = ref.domain();
    double lo = dom.lo;
    double hi = dom.hi;
    if (std::isinf(hi)) {
        hi = std::max(1.0, lo + 1.0);
        while (ref.eval(hi) < p) {
            hi = lo + 2.0 * (hi - lo);
            if (hi > 1e308) throw std::runtime_error("quantile bracket blew up");
        }
    }
    if (std::isinf(lo)) {
        lo = std::min(-1.0, hi - 1.0);
        while (ref.eval(lo) >= p) lo = hi - 2.0 * (hi - lo);
    }
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // interval at machine resolution
        if (ref.eval(mid) >= p) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

} // namespace igmc
