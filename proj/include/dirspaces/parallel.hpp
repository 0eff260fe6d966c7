#pragma once

#include <cstddef>
#include <functional>

namespace dirspaces {

/// Worker count: DIRSPACES_THREADS if set to a positive integer, otherwise
/// the hardware concurrency.
std::size_t thread_cap();

/// Runs body(i) for i in [0, count). Each index must write only its own
/// output slot; results are then independent of the thread count. The first
/// exception thrown by any body is rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace dirspaces
