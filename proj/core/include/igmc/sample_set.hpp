#ifndef IGMC_SAMPLE_SET_HPP
#define IGMC_SAMPLE_SET_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace igmc {

// Declared support of a sample set and of the models fitted to it.
enum class Support {
    UnitInterval, // [0, 1]
    NonnegReals,  // [0, +inf)
    Binary        // {0, 1}
};

std::string_view to_string(Support support) noexcept;
bool support_contains(Support support, double value) noexcept;

// Ordered collection of real observations with a declared support.
// Values keep insertion order: initial observations first, generated
// values appended after them. The running sum is maintained on append in
// the same association order a front-to-back re-summation would use, so
// sum() is bit-identical to std::accumulate over values().
class SampleSet {
public:
    SampleSet(std::vector<double> values, Support support);

    // `ones` ones followed by `total - ones` zeros, binary support.
    static SampleSet from_binary_counts(std::size_t total, std::size_t ones);

    // `count` copies of `value`.
    static SampleSet constant(std::size_t count, double value, Support support);

    void append(double value);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    double sum() const noexcept { return sum_; }
    double mean() const; // throws EmptySampleSet
    std::span<const double> values() const noexcept { return values_; }
    Support support() const noexcept { return support_; }

private:
    std::vector<double> values_;
    double sum_ = 0.0;
    Support support_;
};

} // namespace igmc

#endif // IGMC_SAMPLE_SET_HPP
