#pragma once

#include <cstddef>
#include <functional>

namespace hartree {

/// Worker count: HW_THREADS if set (>= 1), else hardware concurrency.
std::size_t thread_count();

/// Runs body(i) for i in [0, n). Iterations are split into contiguous blocks;
/// each writes only its own outputs, so results do not depend on the thread
/// count. The first exception thrown by any iteration is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hartree
