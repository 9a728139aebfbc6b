#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace motivic {

// Evaluates f(i) for i in [0, n) and returns the results indexed by i.
// Work is distributed across threads when OpenMP is available; callers fold
// the vector in index order, so results never depend on thread count.
template <class R, class F>
std::vector<R> parallel_map(long long n, F&& f) {
  std::vector<R> out(static_cast<std::size_t>(n < 0 ? 0 : n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(i);
#else
  for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(i);
#endif
  return out;
}

// Serial twin of parallel_map, kept as the reference path for tests and for
// the benchmark comparison.
template <class R, class F>
std::vector<R> serial_map(long long n, F&& f) {
  std::vector<R> out(static_cast<std::size_t>(n < 0 ? 0 : n));
  for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(i);
  return out;
}

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace motivic
