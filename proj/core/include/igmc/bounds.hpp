#ifndef IGMC_BOUNDS_HPP
#define IGMC_BOUNDS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

namespace igmc {

enum class BoundKind { Hoeffding, AzumaTail, DkwTail, Theorem1L1 };

std::string_view to_string(BoundKind kind) noexcept;

// A bound value together with the named inputs it was evaluated at.
// For Theorem1L1 the two addends are recorded under "depth_term" and
// "mc_term" and value is exactly their sum.
struct BoundReport {
    BoundKind kind = BoundKind::Hoeffding;
    std::map<std::string, double> inputs;
    double value = 0.0;
};

// Two-sided Hoeffding tail 2*exp(-2*m*t^2), capped at 1.
double hoeffding_bound(std::size_t m, double t);

// Limiting Azuma tail for the coupled-chain deviation:
// 2*exp(-((h+m)/2)*a^2), capped at 1.
double azuma_tail(std::size_t m, std::size_t h, double a);

// DKW tail 2*exp(-2*n*a^2), capped at 1.
double dkw_tail(std::size_t n, double a);

// Expected-L1 convergence bound sqrt(2*pi/(m+h)) + sqrt(pi/(2*n)),
// with both addends recorded in the report.
BoundReport theorem1_l1_bound(std::size_t m, std::size_t h, std::size_t n);

} // namespace igmc

#endif // IGMC_BOUNDS_HPP
