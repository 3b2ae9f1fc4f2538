#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace asharp {

// fn(i) for i in [0, n) on up to `workers` threads. Each index owns its output
// slot, so results are identical for any worker count. First exception wins
// and is rethrown on the caller thread.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

template <typename T>
std::vector<T> parallel_map(std::size_t n, int workers,
                            const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  parallel_for(n, workers, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace asharp
