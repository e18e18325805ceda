#pragma once

#include <functional>

namespace hamfix {

// Worker count from HAMFIX_THREADS, else the number of hardware threads (at least 1).
unsigned default_thread_count();

// Runs task(0..tasks-1) on up to `threads` workers. Tasks must write to disjoint
// slots; callers merge slot results in index order for determinism.
void parallel_for(unsigned tasks, unsigned threads, const std::function<void(unsigned)>& task);

}  // namespace hamfix
