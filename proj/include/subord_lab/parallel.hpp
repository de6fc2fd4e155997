#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace subord_lab {

/// Worker cap: SUBORD_LAB_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
inline unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SUBORD_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(std::min<long>(v, 1024));
  }
  return hw;
}

/// Fills out[i] = f(i) for i in [0, n). Results land in index order so any
/// reduction over `out` is independent of scheduling. The first exception (by
/// index) is rethrown on the calling thread.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, const F& f) {
  std::vector<T> out(n);
  const std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
  if (workers <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::size_t> error_index(workers, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) {
        try {
          out[i] = f(i);
        } catch (...) {
          errors[w] = std::current_exception();
          error_index[w] = i;
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  std::size_t first = n;
  std::exception_ptr err;
  for (std::size_t w = 0; w < workers; ++w)
    if (errors[w] && error_index[w] < first) {
      first = error_index[w];
      err = errors[w];
    }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace subord_lab
