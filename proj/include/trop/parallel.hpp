#pragma once

#include <cstddef>
#include <functional>

namespace trop {

// Worker count used when a caller passes 0: the TROP_THREADS environment
// variable if set to a positive integer, else the hardware concurrency.
int default_thread_count();

// Calls fn(i) for every i in [0, count) on up to `threads` workers (0 means
// default_thread_count()). The first exception thrown by any call is rethrown
// after all workers stop; remaining indices are skipped once one is thrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace trop
