#pragma once

#include <cstddef>
#include <functional>

namespace orbk {

/// Runs fn(0..count-1) on up to `workers` threads. Each index is handled
/// exactly once; callers write results into preallocated slots so the
/// outcome does not depend on scheduling. If any call throws, the
/// exception from the smallest failing index is rethrown.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace orbk
