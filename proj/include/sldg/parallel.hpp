#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace sldg {

// Static-partition parallel loop; fn(i) is called once for every i in [0,n).
// Tasks must write to disjoint locations, so the result is independent of the
// worker count. The first exception thrown by a task is rethrown.
inline void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  int w = std::min(workers, n);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(w);
  pool.reserve(w);
  for (int t = 0; t < w; ++t) {
    int lo = int(long(n) * t / w), hi = int(long(n) * (t + 1) / w);
    pool.emplace_back([&, lo, hi, t] {
      try {
        for (int i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace sldg
