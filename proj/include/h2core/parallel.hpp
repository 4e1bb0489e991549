#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace h2core {

// 0 means "use all hardware threads".
inline unsigned effective_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Static chunking over [0, n). f(i) must only touch state owned by index i;
// the partition is deterministic but callers must not rely on it, only on
// per-index outputs.
template <class F>
void parallel_for(std::uint64_t n, unsigned threads, F&& f) {
  threads = effective_threads(threads);
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    for (std::uint64_t i = 0; i < n; ++i) f(i);
    return;
  }
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, n));
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&f, n, w, workers] {
      const std::uint64_t lo = n * w / workers;
      const std::uint64_t hi = n * (w + 1) / workers;
      for (std::uint64_t i = lo; i < hi; ++i) f(i);
    });
  }
}

}  // namespace h2core
