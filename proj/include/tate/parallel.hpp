#pragma once

#include <functional>

namespace tate {

// Advisory worker count for row-parallel loops. 0 means hardware concurrency.
void set_thread_hint(int n);
int thread_hint();

// Runs fn(i) for i in [0, n) on up to thread_hint() workers. fn must be safe
// to run concurrently for distinct i (all hot paths here write disjoint rows).
void parallel_for(long n, const std::function<void(long)>& fn);

}  // namespace tate
