#include "igmc/sample_set.hpp"

#include <cmath>
#include <string>

#include "igmc/errors.hpp"

namespace igmc {

std::string_view to_string(Support support) noexcept {
    switch (support) {
        case Support::UnitInterval: return "unit_interval";
        case Support::NonnegReals: return "nonneg_reals";
        case Support::Binary: return "binary";
    }
    return "unknown";
}

bool support_contains(Support support, double value) noexcept {
    if (!std::isfinite(value)) return false;
    switch (support) {
        case Support::UnitInterval: return value >= 0.0 && value <= 1.0;
        case Support::NonnegReals: return value >= 0.0;
        case Support::Binary: return value == 0.0 || value == 1.0;
    }
    return false;
}

namespace {

void check_in_support(Support support, double value) {
    if (support_contains(support, value)) return;
    const std::string msg =
        "value " + std::to_string(value) + " outside support " + std::string(to_string(support));
    if (support == Support::Binary) throw NonBinaryValue(msg);
    throw SupportViolation(msg);
}

} // namespace

SampleSet::SampleSet(std::vector<double> values, Support support)
    : values_(std::move(values)), support_(support) {
    for (double v : values_) {
        check_in_support(support_, v);
        sum_ += v;
    }
}

SampleSet SampleSet::from_binary_counts(std::size_t total, std::size_t ones) {
    if (ones > total) throw InvalidCounts("ones exceeds total count");
    std::vector<double> values(total, 0.0);
    for (std::size_t i = 0; i < ones; ++i) values[i] = 1.0;
    return SampleSet(std::move(values), Support::Binary);
}

SampleSet SampleSet::constant(std::size_t count, double value, Support support) {
    return SampleSet(std::vector<double>(count, value), support);
}

void SampleSet::append(double value) {
    check_in_support(support_, value);
    values_.push_back(value);
    sum_ += value;
}

double SampleSet::mean() const {
    if (values_.empty()) throw EmptySampleSet("mean of an empty sample set");
    return sum_ / static_cast<double>(values_.size());
}

} // namespace igmc
