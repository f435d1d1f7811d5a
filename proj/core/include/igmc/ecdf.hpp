#ifndef IGMC_ECDF_HPP
#define IGMC_ECDF_HPP

#include <span>
#include <vector>

namespace igmc {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

// Right-continuous step CDF: eval(t) is the cumulative value at the
// largest breakpoint <= t, and 0 before the first breakpoint. Jumps use
// the "<= t" convention, so eval(breakpoint) includes the jump.
class EmpiricalCdf {
public:
    // breakpoints strictly increasing; cumulative the same length,
    // strictly increasing, within (0,1], and ending at exactly 1.
    EmpiricalCdf(std::vector<double> breakpoints, std::vector<double> cumulative);

    // ECDF of the samples: F(t) = #{x_i <= t} / n.
    static EmpiricalCdf from_samples(std::vector<double> samples);

    double eval(double t) const noexcept;

    std::span<const double> breakpoints() const noexcept { return breakpoints_; }
    std::span<const double> cumulative() const noexcept { return cumulative_; }
    double min_breakpoint() const noexcept { return breakpoints_.front(); }
    double max_breakpoint() const noexcept { return breakpoints_.back(); }

private:
    std::vector<double> breakpoints_;
    std::vector<double> cumulative_;
};

} // namespace igmc

#endif // IGMC_ECDF_HPP
