#pragma once

#include <cstddef>
#include <functional>

namespace estrip {

// Worker count: EULER_STRIP_THREADS if set to a positive integer, else hardware concurrency.
unsigned thread_count();

// Runs fn(i) for i in [0, n) over thread_count() workers in contiguous blocks.
// The first exception thrown by any worker is rethrown after all have joined.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace estrip
