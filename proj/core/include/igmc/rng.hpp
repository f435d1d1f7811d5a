#ifndef IGMC_RNG_HPP
#define IGMC_RNG_HPP

#include <cstdint>
#include <random>

namespace igmc {

// splitmix64 (Steele, Lea & Flood). Advances `state` by the golden-ratio
// increment and returns the finalized output word.
constexpr std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Seed for stream index `stream` under a master seed: the (stream+1)-th
// output of splitmix64 initialized at `master`. Fixed here so independent
// implementations can reproduce every stream from (master, stream) alone.
constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    std::uint64_t state = master + stream * 0x9e3779b97f4a7c15ull;
    return splitmix64_next(state);
}

// Deterministic per-stream random source. Wraps std::mt19937_64 (whose
// output sequence is pinned by the standard) and converts to floating
// point with fixed shifts, never with distribution objects, so a given
// (master, stream) pair yields the same draws on every platform.
class RngState {
public:
    explicit RngState(std::uint64_t seed) : gen_(seed) {}

    static RngState for_stream(std::uint64_t master, std::uint64_t stream) {
        return RngState(stream_seed(master, stream));
    }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0,1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform on (0,1]; never zero, so log() of the result is finite.
    double uniform_open0() { return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53; }

    // Standard normal via Box-Muller; one spare value is cached.
    double standard_normal();

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace igmc

#endif // IGMC_RNG_HPP
