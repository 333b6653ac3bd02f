#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace mpnet {

// Runs fn(i) for i in [0, n). Work is split by index blocks across up to
// `workers` threads; each index runs exactly once on exactly one thread,
// so results written to per-index slots are independent of the worker
// count. workers <= 1 runs inline.
inline void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  if (workers <= 1 || n == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  const int n_threads = std::min(workers, n);
  std::vector<std::thread> threads;
  threads.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) {
    threads.emplace_back([&, t]() {
      for (int i = t; i < n; i += n_threads) fn(i);
    });
  }
  for (auto& th : threads) th.join();
}

inline int default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace mpnet
