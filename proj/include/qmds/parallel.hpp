#pragma once

#include <cstddef>
#include <functional>

namespace qmds {

// Bounded worker pool over an index range; fn(i) runs exactly once per index,
// in no particular order. workers = 0 picks the hardware concurrency. The
// first exception thrown by any worker is rethrown after the pool drains.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace qmds
