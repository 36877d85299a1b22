#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace paretotail {

/// Runs fn(begin, end) over contiguous index chunks of [0, n) on up to
/// hardware_concurrency threads. The partition is deterministic but callers
/// must make per-index work independent of the partition (e.g. by seeding
/// streams per index) for reproducible results.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                         unsigned max_threads = 0) {
  if (n == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (max_threads != 0) hw = std::min(hw, max_threads);
  const std::size_t n_chunks = std::min<std::size_t>(hw, n);
  if (n_chunks <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(n_chunks);
  std::vector<std::exception_ptr> errors(n_chunks);
  const std::size_t chunk = (n + n_chunks - 1) / n_chunks;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    const std::size_t lo = c * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    workers.emplace_back([&fn, &errors, c, lo, hi] {
      try {
        fn(lo, hi);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace paretotail
