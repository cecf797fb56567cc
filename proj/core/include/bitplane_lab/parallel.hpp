#pragma once

#include <cstddef>
#include <functional>

namespace bpl {

/// Worker count: BITPLANE_LAB_THREADS when set to a positive integer, otherwise
/// (unset or 0) std::thread::hardware_concurrency(), at least 1.
std::size_t thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Indices are
/// claimed dynamically; the first exception thrown by any body is rethrown after
/// all workers have stopped.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace bpl
