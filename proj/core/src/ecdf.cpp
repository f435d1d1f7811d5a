#include "igmc/ecdf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace igmc {

EmpiricalCdf::EmpiricalCdf(std::vector<double> breakpoints, std::vector<double> cumulative)
    : breakpoints_(std::move(breakpoints)), cumulative_(std::move(cumulative)) {
    if (breakpoints_.empty()) throw std::invalid_argument("EmpiricalCdf needs >= 1 breakpoint");
    if (breakpoints_.size() != cumulative_.size())
        throw std::invalid_argument("breakpoints and cumulative lengths differ");
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (!std::isfinite(breakpoints_[i]))
            throw std::invalid_argument("non-finite breakpoint");
        if (i > 0 && !(breakpoints_[i - 1] < breakpoints_[i]))
            throw std::invalid_argument("breakpoints must be strictly increasing");
        const double c = cumulative_[i];
        if (!(c > 0.0 && c <= 1.0))
            throw std::invalid_argument("cumulative values must lie in (0,1]");
        if (i > 0 && !(cumulative_[i - 1] < c))
            throw std::invalid_argument("cumulative values must be strictly increasing");
    }
    if (cumulative_.back() != 1.0)
        throw std::invalid_argument("cumulative must end at exactly 1");
}

EmpiricalCdf EmpiricalCdf::from_samples(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("ECDF of an empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());

    std::vector<double> breakpoints;
    std::vector<double> cumulative;
    std::size_t seen = 0;
    for (std::size_t i = 0; i < samples.size();) {
        std::size_t j = i;
        while (j < samples.size() && samples[j] == samples[i]) ++j;
        seen += j - i;
        breakpoints.push_back(samples[i]);
        cumulative.push_back(static_cast<double>(seen) / n);
        i = j;
    }
    return EmpiricalCdf(std::move(breakpoints), std::move(cumulative));
}

double EmpiricalCdf::eval(double t) const noexcept {
    // index of the largest breakpoint <= t
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    if (it == breakpoints_.begin()) return 0.0;
    return cumulative_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

} // namespace igmc
