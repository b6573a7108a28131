#pragma once

// Tiny fork-join helper. GFR_THREADS caps the worker count; results must be
// written to disjoint slots so the merged outcome is schedule-independent.

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gfr {

inline unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("GFR_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v < 1024) hw = static_cast<unsigned>(v) < hw ? static_cast<unsigned>(v) : hw;
  }
  return hw;
}

/// Splits [0, n) into contiguous chunks, one worker per chunk.
template <class Fn>
void parallel_chunks(std::uint32_t n, Fn&& fn) {
  unsigned workers = thread_budget();
  if (workers <= 1 || n < 2 * workers) {
    fn(0u, n);
    return;
  }
  std::vector<std::thread> pool;
  std::uint32_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint32_t lo = w * chunk;
    if (lo >= n) break;
    std::uint32_t hi = lo + chunk < n ? lo + chunk : n;
    pool.emplace_back([=, &fn] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace gfr
