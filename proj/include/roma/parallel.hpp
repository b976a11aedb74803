#pragma once

#include <cstddef>
#include <functional>

namespace roma {

/// Worker count: ROMA_THREADS when set to a positive integer, else hardware concurrency.
std::size_t worker_count();

/// Calls body(i) for every i in [0, count) across up to worker_count() threads.
/// Indices are handed out in fixed contiguous chunks; the first exception thrown by
/// any body is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace roma
