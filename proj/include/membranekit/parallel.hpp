#pragma once

#include <cstddef>
#include <functional>

namespace membranekit {

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Work is assigned
/// by fixed striding, so callers writing results by index get output that does
/// not depend on the thread count.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace membranekit
