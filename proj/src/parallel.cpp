#include "kahler/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kahler {

bool openmp_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int sweep_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {

void parallel_for_impl(std::size_t n, void* ctx,
                       void (*body)(void*, std::size_t), bool parallel) {
#ifdef _OPENMP
  if (parallel && n > 1) {
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i)
      body(ctx, static_cast<std::size_t>(i));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) body(ctx, i);
}

}  // namespace detail

}  // namespace kahler
