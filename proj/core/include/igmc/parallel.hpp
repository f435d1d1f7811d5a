#ifndef IGMC_PARALLEL_HPP
#define IGMC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace igmc {

// Runs fn(i) for every i in [0, count) on up to `threads` workers. Each
// index is processed exactly once; callers write results into per-index
// slots, so the outcome is independent of scheduling. The first exception
// thrown by any worker is rethrown after all workers join.
void parallel_for_index(std::size_t count, std::size_t threads,
                        const std::function<void(std::size_t)>& fn);

} // namespace igmc

#endif // IGMC_PARALLEL_HPP
