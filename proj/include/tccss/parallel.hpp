#pragma once

#include <cstddef>
#include <functional>

namespace tccss {

/// Worker count: TCCSS_THREADS if set and positive, otherwise hardware
/// concurrency (0 means auto).
std::size_t thread_count();

/// Runs body(i) for i in [0, n) across worker threads. Each index is
/// visited exactly once; callers write into per-index slots, so results do
/// not depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace tccss
