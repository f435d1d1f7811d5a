#ifndef IGMC_ENGINE_HPP
#define IGMC_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "igmc/ecdf.hpp"
#include "igmc/generative.hpp"
#include "igmc/rng.hpp"
#include "igmc/sample_set.hpp"

namespace igmc {

struct IgmcConfig {
    std::size_t sample_size_n = 1000; // number of independent chains
    std::size_t depth_h = 1000;       // generated values appended per chain
    std::uint64_t master_seed = 0;
};

// One chain's grow-and-refit state. Each step fits the approach to the
// current working set, draws one value, and appends it. The running sum is
// kept incrementally; debug builds re-sum the set and assert bit equality.
class ChainState {
public:
    explicit ChainState(SampleSet working_set);

    void step(const GenerativeApproach& phi, RngState& rng);

    // Z_k = (sum of all current values) / (initial count + steps taken).
    double running_mean() const noexcept;
    double running_sum() const noexcept { return running_sum_; }
    std::size_t steps_taken() const noexcept { return steps_; }
    std::size_t initial_size() const noexcept { return initial_size_; }
    const SampleSet& working_set() const noexcept { return set_; }

private:
    SampleSet set_;
    double running_sum_;
    std::size_t steps_ = 0;
    std::size_t initial_size_;
};

// Posterior draws mu_n, one per chain, each equal to the chain's final
// running mean (sum of initial + generated values over M + H).
struct PosteriorSamples {
    std::vector<double> mus;
    IgmcConfig config;
    std::size_t initial_m = 0;
};

// Runs one chain of depth_h fit/sample/append rounds on a copy of
// `initial` and returns the final running mean. The caller's set is not
// mutated. Fit errors propagate.
double run_chain(const SampleSet& initial, const GenerativeApproach& phi,
                 std::size_t depth_h, RngState& rng);

// Runs config.sample_size_n independent chains. Chain n draws from the
// stream derived from (master_seed, n), so the result is bit-identical
// whether chains execute sequentially or on `threads` workers.
PosteriorSamples run_igmc(const SampleSet& initial, const GenerativeApproach& phi,
                          const IgmcConfig& config, std::size_t threads = 1);

// Step CDF F(t) = #{n : mu_n <= t} / N.
EmpiricalCdf posterior_cdf(const PosteriorSamples& samples);

} // namespace igmc

#endif // IGMC_ENGINE_HPP
