#pragma once

#include <cstdint>
#include <random>

#include "kahler/poly.hpp"

namespace kahler {

/// Deterministic sample source for randomized checks.  All draws go through
/// the raw engine with modulo reduction, so a fixed seed yields the same
/// stream on every platform we build on.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }

  long long int_in(long long lo, long long hi) {
    if (hi < lo) throw ValidationError("int_in: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(rng_() % span);
  }

  bool flip() { return rng_() & 1; }

  std::size_t index(std::size_t n) {
    if (n == 0) throw ValidationError("index: empty range");
    return static_cast<std::size_t>(rng_() % n);
  }

  /// Integer coefficient in [-9, 9] mapped into the field.
  Scalar scalar(const Field& f) { return Scalar::from_int(f, int_in(-9, 9)); }

  Scalar nonzero_scalar(const Field& f) {
    for (;;) {
      Scalar c = scalar(f);
      if (!c.is_zero()) return c;
    }
  }

  Monomial monomial(std::size_t nvars, std::uint32_t max_degree) {
    Monomial m(nvars);
    if (nvars == 0) return m;
    const auto d = static_cast<std::uint32_t>(int_in(0, max_degree));
    for (std::uint32_t k = 0; k < d; ++k) m[index(nvars)] += 1;
    return m;
  }

  /// Random polynomial with at most `max_terms` terms of degree
  /// <= max_degree (possibly zero).
  Poly poly(const ContextPtr& ctx, std::uint32_t max_degree,
            std::size_t max_terms = 4) {
    std::vector<Poly::Term> terms;
    const auto t = static_cast<std::size_t>(int_in(0, (long long)max_terms));
    for (std::size_t k = 0; k < t; ++k)
      terms.emplace_back(monomial(ctx->nvars(), max_degree),
                         scalar(ctx->field()));
    return Poly::from_terms(ctx, std::move(terms));
  }

  Poly nonzero_poly(const ContextPtr& ctx, std::uint32_t max_degree,
                    std::size_t max_terms = 4) {
    for (;;) {
      Poly p = poly(ctx, max_degree, max_terms);
      if (!p.is_zero()) return p;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace kahler
