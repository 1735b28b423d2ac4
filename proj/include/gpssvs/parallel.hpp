#pragma once

#include <cstddef>
#include <functional>

namespace gpssvs {

/// Worker count: GPSSVS_THREADS if set and nonzero, else hardware concurrency.
unsigned worker_count();

/// Calls body(i) for i in [0, count) across worker_count() threads. Each index
/// is visited exactly once; the body writes only to its own slot. The first
/// exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace gpssvs
