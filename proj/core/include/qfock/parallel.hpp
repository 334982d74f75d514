#pragma once

#include <cstddef>
#include <functional>

namespace qfock {

/// Worker count: QFOCK_THREADS if set to a positive integer, else the hardware count.
int thread_count();

/// Calls fn(i) for i in [0, n) over thread_count() workers in contiguous blocks.
/// Callers write results to slot i, so output order never depends on scheduling.
/// The first exception thrown by any fn is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qfock
