#pragma once

#include <cstddef>
#include <functional>

namespace f2hopf {

// Worker count used when a call passes jobs = 0 (defaults to the hardware count).
void set_default_jobs(unsigned jobs);
unsigned default_jobs();

// Runs fn(i) for i in [0, count) on a small pool; tasks are claimed in index
// order and callers write results into per-index slots, so output order never
// depends on scheduling.  The first exception thrown by a task is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn, unsigned jobs = 0);

}  // namespace f2hopf
