#pragma once

#include <cstddef>
#include <functional>

namespace gf2lab {

/// Worker count used by the parallel loops. Defaults to GF2LAB_THREADS when
/// set, otherwise the hardware concurrency.
unsigned thread_count();
void set_thread_count(unsigned n);

/// Runs body(i) for i in [0, count), splitting the range into contiguous
/// chunks across worker threads. Bodies must only write to disjoint state.
/// Exceptions thrown by a body are rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t min_chunk = 1);

} // namespace gf2lab
