#pragma once

#include <optional>
#include <vector>

#include "kahler/poly.hpp"

namespace kahler {

/// Pair-queue cap: Buchberger raises ResourceError instead of grinding on
/// once this many critical pairs have been enqueued.
inline constexpr std::size_t kDefaultPairCap = 10000;

// ===== ideals ===============================================================

/// An ideal of the polynomial ring, held together with a reduced Groebner
/// basis (monic, mutually fully reduced, sorted ascending by leading
/// monomial).  The basis is computed eagerly on construction and is
/// deterministic for a fixed generator list.
class Ideal {
 public:
  Ideal() = default;  // placeholder only

  static Ideal of(ContextPtr ctx, std::vector<Poly> generators,
                  std::size_t pair_cap = kDefaultPairCap);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Poly>& generators() const { return generators_; }
  const std::vector<Poly>& basis() const { return basis_; }

  /// Fully reduced normal form: no term of the result is divisible by any
  /// basis leading monomial.  The canonical representative of p's class.
  Poly normal_form(const Poly& p) const;
  bool contains(const Poly& p) const { return normal_form(p).is_zero(); }

  bool is_zero_ideal() const { return basis_.empty(); }
  /// True iff 1 belongs to the ideal (basis is {1}).
  bool is_unit_ideal() const;

 private:
  ContextPtr ctx_;
  std::vector<Poly> generators_;
  std::vector<Poly> basis_;
};

/// Free-function entry point; `of` is the same thing.
Ideal buchberger(const ContextPtr& ctx, std::vector<Poly> generators,
                 std::size_t pair_cap = kDefaultPairCap);
Poly normal_form(const Poly& p, const Ideal& ideal);

// ===== submodules of free modules ===========================================

/// Elements of a free module A^rank are rows of polynomials.
using PolyVec = std::vector<Poly>;

bool polyvec_is_zero(const PolyVec& v);
PolyVec polyvec_zero(const ContextPtr& ctx, std::size_t rank);
PolyVec polyvec_add(const PolyVec& a, const PolyVec& b);
PolyVec polyvec_sub(const PolyVec& a, const PolyVec& b);
PolyVec polyvec_neg(const PolyVec& a);
PolyVec polyvec_scale(const PolyVec& a, const Poly& p);
PolyVec polyvec_times_term(const PolyVec& a, const Scalar& c,
                           const Monomial& m);
std::string polyvec_to_string(const PolyVec& v);

/// Leading term of a row under position-over-term order: the leading
/// monomial of the first nonzero component (e_0 > e_1 > ...; ties within a
/// component fall back to the context's monomial order).
struct ModuleTerm {
  std::size_t pos;
  Monomial mono;
  Scalar coeff;
};
std::optional<ModuleTerm> leading_module_term(const PolyVec& v);

/// A submodule of A^rank given by generating rows, held with an
/// auto-reduced module Groebner basis under position-over-term order.
/// Buchberger's coprime-lcm shortcut is deliberately NOT applied here: it
/// is unsound for modules (tails in other positions survive).
class SubmoduleBasis {
 public:
  SubmoduleBasis() = default;  // placeholder only

  static SubmoduleBasis of(ContextPtr ctx, std::size_t rank,
                           std::vector<PolyVec> rows,
                           std::size_t pair_cap = kDefaultPairCap);

  const ContextPtr& context() const { return ctx_; }
  std::size_t rank() const { return rank_; }
  const std::vector<PolyVec>& rows() const { return rows_; }
  const std::vector<PolyVec>& basis() const { return basis_; }

  PolyVec normal_form(const PolyVec& v) const;
  bool contains(const PolyVec& v) const {
    return polyvec_is_zero(normal_form(v));
  }

 private:
  void check_row(const PolyVec& v) const;

  ContextPtr ctx_;
  std::size_t rank_ = 0;
  std::vector<PolyVec> rows_;
  std::vector<PolyVec> basis_;
};

SubmoduleBasis module_buchberger(const ContextPtr& ctx, std::size_t rank,
                                 std::vector<PolyVec> rows,
                                 std::size_t pair_cap = kDefaultPairCap);
PolyVec module_normal_form(const PolyVec& v, const SubmoduleBasis& basis);

}  // namespace kahler
