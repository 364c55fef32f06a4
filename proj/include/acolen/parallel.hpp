#ifndef ACOLEN_PARALLEL_HPP
#define ACOLEN_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace acolen {

/// Worker count after applying the ACOLEN_THREADS override; 0 requests
/// hardware concurrency.
int resolve_threads(int requested);

/// Runs fn(i) for i in [0, n). Results must be written to per-index slots so
/// the outcome is independent of the partition.
void parallel_for_index(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace acolen

#endif
