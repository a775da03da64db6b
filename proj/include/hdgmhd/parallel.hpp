#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace hdgmhd {

// Runs fn(i) for i in [0, n). With nthreads <= 1 the loop is serial.
// Workers own disjoint index ranges and write only to index-addressed slots,
// so results are identical for any thread count.
inline void parallel_for(int n, int nthreads, const std::function<void(int)>& fn) {
  if (nthreads <= 1 || n < 2 * nthreads) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  nthreads = std::min(nthreads, n);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  const int chunk = (n + nthreads - 1) / nthreads;
  for (int t = 0; t < nthreads; ++t) {
    const int lo = t * chunk;
    const int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn]() {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace hdgmhd
