#pragma once

#include <cstddef>
#include <functional>

namespace goodman {

// Worker count: min(hardware, GOODMAN_LAB_THREADS if set). At least 1.
std::size_t workerCount();

// Runs fn(i) for i in [0, n), partitioned across workers. Deterministic
// output requires fn to write only to its own index (all callers do).
void parallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace goodman
