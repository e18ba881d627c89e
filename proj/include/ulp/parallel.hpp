#pragma once

#include <cstddef>
#include <functional>

namespace ulp {

/// Worker count used by data-parallel sweeps; 0 means hardware concurrency.
void set_thread_count(int threads);
int thread_count();

/// Splits [0, count) into contiguous chunks and runs body(begin, end) on each,
/// one chunk per worker. Chunk boundaries depend only on count and the worker
/// count, so results written to disjoint slots are deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk = 1024);

} // namespace ulp
