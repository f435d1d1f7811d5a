#include "igmc/special_functions.hpp"

#include <cmath>
#include <stdexcept>

#include "igmc/errors.hpp"

namespace igmc {

namespace {

constexpr int kMaxIterations = 500;
constexpr double kEpsilon = 1e-12;
constexpr double kTiny = 1e-300;

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

// Continued fraction for I_x(a,b), modified Lentz.
double beta_continued_fraction(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;

    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;

    for (int m = 1; m <= kMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEpsilon) return h;
    }
    throw std::runtime_error("incomplete beta continued fraction did not converge");
}

// Series for P(s,x), valid and fast for x < s + 1.
double gamma_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    double denom = s;
    for (int k = 0; k < kMaxIterations; ++k) {
        denom += 1.0;
        term *= x / denom;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEpsilon)
            return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
    throw std::runtime_error("incomplete gamma series did not converge");
}

// Continued fraction for Q(s,x) = 1 - P(s,x), valid for x >= s + 1.
double gamma_continued_fraction(double s, double x) {
    double b = x + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIterations; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEpsilon)
            return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
    throw std::runtime_error("incomplete gamma continued fraction did not converge");
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0)
        throw ParameterOutOfRange("beta parameters must be positive and finite");
    if (std::isnan(x)) throw ParameterOutOfRange("beta evaluation point is NaN");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;

    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                             a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    double result;
    if (x < (a + 1.0) / (a + b + 2.0)) {
        result = front * beta_continued_fraction(a, b, x) / a;
    } else {
        result = 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
    }
    return clamp01(result);
}

double regularized_lower_incomplete_gamma(double s, double x) {
    if (!std::isfinite(s) || s <= 0.0)
        throw ParameterOutOfRange("gamma shape must be positive and finite");
    if (std::isnan(x) || x < 0.0)
        throw ParameterOutOfRange("gamma evaluation point must be >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;

    if (x < s + 1.0) return clamp01(gamma_series(s, x));
    return clamp01(1.0 - gamma_continued_fraction(s, x));
}

} // namespace igmc
