#ifndef DIAGLAB_PARALLEL_HPP
#define DIAGLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace diaglab {

// Worker cap: DIAGLAB_THREADS if set (clamped to >= 1), otherwise the
// hardware concurrency, at most 16.
int threadBudget();

// Runs fn(i) for i in [0, count) on up to threadBudget() threads in fixed
// contiguous chunks. Each index writes only its own slot, so the result is
// identical to the sequential loop.
void parallelFor(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace diaglab

#endif
