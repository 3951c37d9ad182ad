#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kahler/context.hpp"

namespace kahler {

/// Print `m` with the context's variable names: "x^2*y", "1" for the empty
/// monomial.
std::string monomial_to_string(const Context& ctx, const Monomial& m);

/// A sparse multivariate polynomial over its context's field.  Terms are
/// kept sorted strictly descending under the context's monomial order with
/// no zero coefficients, so structural equality is semantic equality.
class Poly {
 public:
  using Term = std::pair<Monomial, Scalar>;

  Poly() = default;  // only as a placeholder; has no context

  static Poly zero(ContextPtr ctx);
  static Poly constant(ContextPtr ctx, const Scalar& c);
  static Poly constant(ContextPtr ctx, long long n);
  static Poly variable(ContextPtr ctx, std::size_t i);
  static Poly variable(ContextPtr ctx, const std::string& name);
  /// Normalizes: merges duplicates, drops zeros, sorts descending.
  static Poly from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
  }
  std::size_t term_count() const { return terms_.size(); }
  /// Total degree; 0 for the zero polynomial.
  std::uint64_t degree() const;

  const Monomial& leading_monomial() const;     // IndexError on zero
  const Scalar& leading_coefficient() const;    // IndexError on zero
  /// Coefficient of `m` (zero scalar if absent).
  Scalar coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Scalar& c) const;
  /// c * m * this — the workhorse of polynomial reduction.
  Poly times_term(const Scalar& c, const Monomial& m) const;
  Poly pow(std::uint32_t e) const;

  /// d/dx_i with the usual exponent rule; exact in every characteristic.
  Poly partial_derivative(std::size_t i) const;

  /// Simultaneous substitution x_i := images[i].  All images must share one
  /// context, which becomes the result's context.  ArityError if
  /// images.size() != nvars().
  Poly substitute(const std::vector<Poly>& images) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Canonical form, e.g. "3/2*x^2*y - y + 1"; "0" for zero.  Terms print
  /// in descending order; parse(to_string()) round-trips.
  std::string to_string() const;

 private:
  explicit Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  void require_context() const;

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

// ===== generic evaluation ==================================================
//
// eval_poly interprets a polynomial in any commutative ring presented as an
// adapter with:   using Elem;  Elem zero();  Elem from_scalar(Scalar);
//                 Elem add(Elem, Elem);  Elem mul(Elem, Elem);
// This is how one polynomial evaluator serves plain scalars, polynomials
// (substitution), algebra quotients, and square-zero extensions.

template <class Ring>
typename Ring::Elem eval_poly(const Poly& p,
                              const std::vector<typename Ring::Elem>& args,
                              const Ring& ring) {
  if (!p.context())
    throw ContextError("eval_poly: polynomial has no context");
  if (args.size() != p.context()->nvars())
    throw ArityError("eval_poly: expected " +
                     std::to_string(p.context()->nvars()) + " arguments, got " +
                     std::to_string(args.size()));
  auto result = ring.zero();
  for (const auto& [mono, coeff] : p.terms()) {
    auto acc = ring.from_scalar(coeff);
    for (std::size_t i = 0; i < args.size(); ++i)
      for (std::uint32_t e = 0; e < mono.exponent(i); ++e)
        acc = ring.mul(acc, args[i]);
    result = ring.add(result, acc);
  }
  return result;
}

/// Ring adapter: the coefficient field itself.
struct ScalarRing {
  Field field;
  using Elem = Scalar;
  Elem zero() const { return Scalar::zero(field); }
  Elem from_scalar(const Scalar& c) const { return c; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
};

/// Ring adapter: polynomials over `ctx` (powers substitution).
struct PolyRing {
  ContextPtr ctx;
  using Elem = Poly;
  Elem zero() const { return Poly::zero(ctx); }
  Elem from_scalar(const Scalar& c) const { return Poly::constant(ctx, c); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
};

/// Evaluate at field points.
Scalar eval_at(const Poly& p, const std::vector<Scalar>& point);

}  // namespace kahler
