#pragma once

#include <cstddef>
#include <functional>

namespace netemd {

/// Number of worker threads to use when the caller passes 0.
std::size_t default_thread_count() noexcept;

/// Calls body(i) for every i in [0, count), spread over `threads` workers
/// (0 = default_thread_count()). Results are deterministic as long as body(i)
/// only writes to slot i. The first exception thrown by any call is rethrown
/// after all workers stop.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace netemd
