#include "igmc/engine.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "igmc/errors.hpp"
#include "igmc/parallel.hpp"

namespace igmc {

ChainState::ChainState(SampleSet working_set)
    : set_(std::move(working_set)), running_sum_(set_.sum()), initial_size_(set_.size()) {
    if (set_.empty()) throw EmptySampleSet("chain requires a non-empty initial sample set");
}

void ChainState::step(const GenerativeApproach& phi, RngState& rng) {
    const auto model = phi.fit(set_);
    const double y = model->sample(rng);
    set_.append(y);
    running_sum_ += y;
    ++steps_;
    // Incremental sum and front-to-back re-summation share the same
    // association order, so this holds bitwise.
    assert(running_sum_ ==
           std::accumulate(set_.values().begin(), set_.values().end(), 0.0));
}

double ChainState::running_mean() const noexcept {
    return running_sum_ / static_cast<double>(set_.size());
}

double run_chain(const SampleSet& initial, const GenerativeApproach& phi,
                 std::size_t depth_h, RngState& rng) {
    if (depth_h < 1) throw std::invalid_argument("depth_h must be >= 1");
    ChainState state(initial);
    for (std::size_t h = 0; h < depth_h; ++h) state.step(phi, rng);
    return state.running_mean();
}

PosteriorSamples run_igmc(const SampleSet& initial, const GenerativeApproach& phi,
                          const IgmcConfig& config, std::size_t threads) {
    if (config.sample_size_n < 1) throw std::invalid_argument("sample_size_n must be >= 1");
    if (config.depth_h < 1) throw std::invalid_argument("depth_h must be >= 1");

    std::vector<double> mus(config.sample_size_n);
    parallel_for_index(config.sample_size_n, threads, [&](std::size_t n) {
        RngState rng = RngState::for_stream(config.master_seed, n);
        mus[n] = run_chain(initial, phi, config.depth_h, rng);
    });
    return PosteriorSamples{std::move(mus), config, initial.size()};
}

EmpiricalCdf posterior_cdf(const PosteriorSamples& samples) {
    if (samples.mus.empty()) throw EmptySampleSet("posterior_cdf of zero chains");
    return EmpiricalCdf::from_samples(samples.mus);
}

} // namespace igmc
