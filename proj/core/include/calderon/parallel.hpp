#pragma once

#include <cstddef>
#include <functional>

namespace calderon {

// Worker count for mode sweeps: hardware concurrency, capped by the
// CALDERON_THREADS environment variable when set.
unsigned worker_count();

// Runs body(i) for i in [0, count). Each index is visited exactly once; the
// caller stores results by index so output never depends on scheduling.
// The first exception thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body);

}  // namespace calderon
