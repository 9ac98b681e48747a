#pragma once

#include <cstddef>
#include <functional>

namespace gsh {

/// Worker count: hardware concurrency capped by GSH_LAB_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, n) over contiguous blocks, one per worker.
/// Callers write into per-index slots so results do not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gsh
