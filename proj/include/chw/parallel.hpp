#pragma once

#include <cstddef>
#include <functional>

namespace chw {

// Worker count: CHW_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned worker_count();

// Runs body(0..count-1) on worker_count() threads. Each index runs exactly
// once; callers write results into per-index slots, so the merge order is
// fixed. The first exception thrown by any body is rethrown after all
// workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace chw
