#pragma once

#include <cstddef>
#include <functional>

namespace modhys {

// Runs fn(i) for i = 0 .. n-1 on a transient pool of `threads` workers
// (0 = hardware concurrency).  Tasks must be independent; exceptions from fn
// are captured and the first one rethrown after all workers join.
void parallel_for_index(std::size_t n, int threads,
                        const std::function<void(std::size_t)>& fn);

}  // namespace modhys
