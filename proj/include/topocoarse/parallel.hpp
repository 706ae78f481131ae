#pragma once

#include <cstddef>
#include <functional>

namespace topocoarse {

/// Worker count from TOPOCOARSE_THREADS (0 or unset = hardware concurrency).
unsigned default_thread_count();

/// Runs body(i) for i in [0, count). Each index is visited exactly once; callers write
/// results into preallocated slots so output never depends on scheduling.
/// `threads` = 0 selects default_thread_count(). Exceptions are rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned threads = 0);

}  // namespace topocoarse
