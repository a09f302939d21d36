#pragma once

#include <cstddef>
#include <functional>

namespace anticonc {

/// Clamps a requested worker count to [1, hardware]; 0 means "use hardware".
int resolve_thread_count(int requested);

/// Runs fn(i) for i in [0, count) over a static chunk partition. Callers
/// write per-index slots and reduce sequentially afterwards, so results do
/// not depend on the worker count.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace anticonc
