#pragma once

#include <cstddef>
#include <functional>

namespace pinchext {

// Runs body(i) for i in [0, n) on up to `threads` worker threads. Exceptions
// are rethrown on the caller (the one from the smallest index wins).
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body);

// Thread cap from PINCHEXT_THREADS, else hardware concurrency (at least 1).
std::size_t default_thread_count();

} // namespace pinchext
