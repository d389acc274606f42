#pragma once

#include <functional>

namespace gk {

// Worker bound for parallel sections: GK_THREADS when set (clamped to >= 1),
// otherwise the hardware concurrency.
int worker_count();

// Runs fn(0..n-1), possibly concurrently. Callers keep determinism by writing
// results into per-index slots and merging in index order.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace gk
