#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace kahler {

/// True when the build has OpenMP support compiled in.
bool openmp_available();
/// Number of OpenMP threads a parallel sweep would use (1 without OpenMP).
int sweep_threads();

namespace detail {
void parallel_for_impl(std::size_t n, void* ctx, void (*body)(void*, std::size_t),
                       bool parallel);
}

/// Run fn(i) for i in [0, n).  With `parallel` set (and OpenMP available)
/// iterations run on OpenMP threads; writers must target per-index slots.
/// Results are bitwise identical to the serial path because callers
/// pre-generate inputs and aggregate slots in index order.  The first
/// exception thrown by any iteration is rethrown after the loop.
template <class F>
void parallel_for(std::size_t n, F&& fn, bool parallel = true) {
  struct Ctx {
    F* fn;
    std::vector<std::exception_ptr>* errors;
  };
  std::vector<std::exception_ptr> errors(n);
  Ctx ctx{&fn, &errors};
  detail::parallel_for_impl(
      n, &ctx,
      [](void* c, std::size_t i) {
        auto* cc = static_cast<Ctx*>(c);
        try {
          (*cc->fn)(i);
        } catch (...) {
          (*cc->errors)[i] = std::current_exception();
        }
      },
      parallel);
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace kahler
