#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kbp {

// Grid kernels come in two flavours: the OpenMP loop used in production and
// the plain serial loop it is tested against. Both visit every index exactly
// once and write only their own output slot, so results are bitwise equal.
enum class Exec { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs body(i) for i in [0, count). The first exception thrown by any
// iteration is rethrown after the loop.
template <class Body>
void for_each_index(std::size_t count, Exec exec, Body&& body) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(kbp_for_each_index_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace kbp
