#pragma once

// Data-parallel map used by the verification kernels. Every kernel keeps a
// serial twin built on serial_map so tests and benchmarks can compare them.

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qgauss {

/// results[i] = fn(state, i), one state per worker made by make_state().
template <class T, class MakeState, class Fn>
std::vector<T> parallel_map(std::size_t n, MakeState make_state, Fn fn) {
  std::vector<T> results(n);
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel
  {
    auto state = make_state();
#pragma omp for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        results[static_cast<std::size_t>(i)] = fn(state, static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return results;
}

template <class T, class MakeState, class Fn>
std::vector<T> serial_map(std::size_t n, MakeState make_state, Fn fn) {
  std::vector<T> results(n);
  auto state = make_state();
  for (std::size_t i = 0; i < n; ++i) results[i] = fn(state, i);
  return results;
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace qgauss
