#pragma once

#include <cstddef>
#include <functional>

namespace wehrl {

/// 0 means: WEHRL_LAB_THREADS if set, otherwise the hardware concurrency.
int resolve_thread_count(int requested);

/// Calls body(i) for every i in [0, count) on up to `threads` workers.
/// Each index is handled exactly once; callers write results into slot i,
/// which keeps reductions independent of scheduling.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace wehrl
