#ifndef IGMC_ERRORS_HPP
#define IGMC_ERRORS_HPP

#include <stdexcept>

namespace igmc {

// Argument errors. Each names the precondition it reports so callers can
// catch them individually.

class EmptySampleSet : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A value outside {0, 1} was handed to a binary-support operation.
class NonBinaryValue : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A value outside the declared support of a sample set.
class SupportViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Sample mean is zero, so an exponential rate 1/mean is undefined.
class ZeroMean : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptyDomain : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidAlpha : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParameterOutOfRange : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidCounts : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Fewer posterior samples than a dispersion statistic needs.
class InsufficientSamples : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Runtime numerical failures.

// Adaptive quadrature could not reach the requested tolerance.
class QuadratureFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Training loss became NaN/inf; usually a bad learning rate.
class NonFiniteLoss : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace igmc

#endif // IGMC_ERRORS_HPP
