#ifndef IGMC_METRICS_HPP
#define IGMC_METRICS_HPP

#include <cstddef>

#include "igmc/ecdf.hpp"
#include "igmc/reference_cdf.hpp"

namespace igmc {

// Exact L1 distance between two step CDFs over `domain`: both functions
// are piecewise constant, so the integral is a finite sum over merged
// breakpoints. No tolerance knob. Throws EmptyDomain when hi <= lo.
double l1_distance(const EmpiricalCdf& f, const EmpiricalCdf& g, Interval domain);

// L1 distance between a step CDF and a continuous reference over `domain`
// to absolute accuracy `tol`. On each constant piece f == c the integrand
// |c - g(t)| has at most one sign change (g is monotone); the crossing is
// bisected and each side integrated by adaptive Simpson. Throws
// QuadratureFailure if the tolerance cannot be met within the depth cap.
double l1_distance(const EmpiricalCdf& f, const ReferenceCdf& g, Interval domain,
                   double tol = 1e-6);

// sup_t |f(t) - g(t)| for a step f against a continuous g. The supremum
// is attained at a breakpoint of f, approached from the left or hit on
// the right, so both one-sided gaps are checked at every breakpoint.
double ks_distance(const EmpiricalCdf& f, const ReferenceCdf& g);

// sup_t |f(t) - g(t)| for two step CDFs; exact via breakpoint merge.
double ks_distance(const EmpiricalCdf& f, const EmpiricalCdf& g);

// Dvoretzky-Kiefer-Wolfowitz half-width: the eps with
// Pr(sup|F_n - F| > eps) <= alpha, i.e. sqrt(ln(2/alpha) / (2n)).
double dkw_band(std::size_t n, double alpha);

} // namespace igmc

#endif // IGMC_METRICS_HPP
