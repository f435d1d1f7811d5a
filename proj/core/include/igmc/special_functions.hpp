#ifndef IGMC_SPECIAL_FUNCTIONS_HPP
#define IGMC_SPECIAL_FUNCTIONS_HPP

namespace igmc {

// Regularized incomplete beta I_x(a, b). Continued fraction (modified
// Lentz) with the usual symmetry switch at x = (a+1)/(a+b+2); result
// clamped to [0,1]. Throws ParameterOutOfRange for a <= 0, b <= 0, or
// non-finite inputs.
double regularized_incomplete_beta(double a, double b, double x);

// Regularized lower incomplete gamma P(s, x). Series for x < s+1,
// continued fraction otherwise; clamped to [0,1]. Throws
// ParameterOutOfRange for s <= 0, x < 0, or non-finite inputs.
double regularized_lower_incomplete_gamma(double s, double x);

} // namespace igmc

#endif // IGMC_SPECIAL_FUNCTIONS_HPP
