#pragma once

#include <cstddef>
#include <functional>

namespace liecg {

void set_threads(int n);
int threads();

// Runs f(0..n-1), possibly concurrently. Callers write into preallocated slots so the
// result does not depend on scheduling. The first failing index (lowest) is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace liecg
