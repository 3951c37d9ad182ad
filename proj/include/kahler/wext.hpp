#pragma once

#include <functional>

#include "kahler/derivation.hpp"
#include "kahler/symmetric.hpp"

namespace kahler {

class WAlgebra;

/// An element (a, m) of the square-zero extension W(A, M) = A (+) M.
struct WElement {
  AlgebraElement base;
  ModuleElement tangent;

  bool operator==(const WElement& o) const {
    return base == o.base && tangent == o.tangent;
  }
  bool operator!=(const WElement& o) const { return !(*this == o); }
  /// "a | (m1, ..., mr)" — both halves canonical prints.
  std::string to_string() const;
};

/// The square-zero extension of an algebra A by an A-module M: carrier
/// A (+) M, product (a, m)(a', m') = (aa', a.m' + a'.m), so M squares to
/// zero.  It carries a T-algebra structure beta (dual-number evaluation)
/// whose induced product is exactly this one.
class WAlgebra {
 public:
  WAlgebra(AlgebraPtr base, ModulePtr fiber);

  const AlgebraPtr& base() const { return base_; }
  const ModulePtr& fiber() const { return fiber_; }

  WElement element(AlgebraElement a, ModuleElement m) const;
  WElement zero() const;
  WElement one() const;
  WElement from_scalar(const Scalar& c) const;
  /// (a, 0) — the canonical section of pi_1.
  WElement lift(const AlgebraElement& a) const;

  bool same_as(const WAlgebra& o) const;
  std::string to_string() const;

 private:
  AlgebraPtr base_;
  ModulePtr fiber_;
};

WElement w_add(const WElement& u, const WElement& v);
WElement w_neg(const WElement& u);
WElement w_sub(const WElement& u, const WElement& v);
WElement w_scaled(const WElement& u, const Scalar& c);
WElement squarezero_product(const WElement& u, const WElement& v);

/// Ring adapter over W(A, M), for eval_poly.
struct WRing {
  const WAlgebra* w;
  using Elem = WElement;
  Elem zero() const { return w->zero(); }
  Elem from_scalar(const Scalar& c) const { return w->from_scalar(c); }
  Elem add(const Elem& x, const Elem& y) const { return w_add(x, y); }
  Elem mul(const Elem& x, const Elem& y) const {
    return squarezero_product(x, y);
  }
};

/// The T-algebra structure map beta: S(W) -> W by dual-number evaluation:
/// base part evaluates p at the base components, tangent part is
/// sum_i nu(dp/dx_i | bases) . tangent_i.  The polynomial lives over any
/// context with args.size() variables and the right field.
WElement beta_eval(const WAlgebra& w, const Poly& p,
                   const std::vector<WElement>& args);

/// beta satisfies the T-algebra unit and multiplication laws, and agrees
/// with iterated ring operations.
std::vector<CheckReport> check_w_is_T_algebra(const WAlgebra& w,
                                              const CheckConfig& cfg);

/// The multiplication induced by beta coincides with the square-zero
/// product (and the unit with the lifted one).
CheckReport check_product_coincides(const WAlgebra& w,
                                    const CheckConfig& cfg);

// ===== T-algebra maps into W ================================================

/// An algebra map Q -> W(B, N) presented by generator images.  Every such
/// map decomposes as <g, D> with g = pi_1 o phi an algebra map and
/// D = pi_2 o phi a derivation on Q valued in N restricted along g
/// (in the fiber itself when g is an identity).  Construction performs the
/// decomposition and validates both halves.
class WAlgebraMap {
 public:
  static WAlgebraMap make(AlgebraPtr source, WAlgebra target,
                          std::vector<WElement> images);

  const AlgebraPtr& source() const { return source_; }
  const WAlgebra& target() const { return target_; }
  const std::vector<WElement>& images() const { return images_; }
  const AlgebraMap& base_map() const { return base_map_; }
  const Derivation& derivation() const { return derivation_; }

  WElement apply(const AlgebraElement& a) const;
  bool operator==(const WAlgebraMap& o) const;
  bool operator!=(const WAlgebraMap& o) const { return !(*this == o); }

 private:
  WAlgebraMap(AlgebraPtr source, WAlgebra target, std::vector<WElement> images,
              AlgebraMap base_map, Derivation derivation)
      : source_(std::move(source)),
        target_(std::move(target)),
        images_(std::move(images)),
        base_map_(std::move(base_map)),
        derivation_(std::move(derivation)) {}

  AlgebraPtr source_;
  WAlgebra target_;
  std::vector<WElement> images_;
  AlgebraMap base_map_;
  Derivation derivation_;
};

/// Der(A, M) -> C^T(A, W(A, M)): D becomes <1, D>.
WAlgebraMap derivation_to_algebra_map(const Derivation& d);

/// C^T(A, W(A, M)) -> Der(A, M): phi must sit over the identity
/// (FirstComponentError otherwise); the derivation is pi_2 o phi.
Derivation algebra_map_to_derivation(const WAlgebraMap& phi);

/// The two halves of the hom-set bijection
/// C^T(Q, W(B, N)) = { (g, D) : g in C^T(Q, B), D in Der(Q, N_g) }.
std::pair<AlgebraMap, Derivation> hom_der_forward(const WAlgebraMap& phi);
WAlgebraMap hom_der_backward(const AlgebraMap& g, const Derivation& d);

// ===== the fibration Mod_T and the W functor ================================

/// An object of Mod_T: an algebra with a module over it.
struct ModTObject {
  AlgebraPtr algebra;
  ModulePtr module;
};
ModTObject make_modt_object(AlgebraPtr algebra, ModulePtr module);

/// An arrow (A, M) -> (B, N): an algebra map g with a module map
/// M -> N_g over A (target N itself when g is an identity).
struct ModTArrow {
  ModTObject source, target;
  AlgebraMap base;
  ModuleMap fiber;
};
ModTArrow make_modt_arrow(ModTObject source, ModTObject target,
                          AlgebraMap base, ModuleMap fiber);
ModTArrow modt_identity(const ModTObject& obj);
ModTArrow compose(const ModTArrow& s, const ModTArrow& t);

/// A T-algebra map W(A, M) -> W(B, N), kept as its action on the two
/// components; compared and checked pointwise.
struct WMap {
  WAlgebra source, target;
  AlgebraMap base;
  std::function<ModuleElement(const ModuleElement&)> fiber;
  std::string label;

  WElement apply(const WElement& u) const;
};

/// W(1 (+) h): (a, m) -> (a, h(m)) for a module map h over a fixed algebra.
WMap w_on_module_map(const WAlgebra& source, const ModuleMap& h);
/// W(g (+) 1): W(A, N_g) -> W(B, N), (a, m) -> (g(a), m).
WMap w_on_algebra_map(const AlgebraMap& g, const ModulePtr& n);
/// The W functor on a Mod_T arrow, factored as W(1 (+) h) then W(g (+) 1).
WMap w_functor_arrow(const ModTArrow& arrow);
WMap compose(const WMap& s, const WMap& t);

/// The T-algebra-map square for a WMap: applying the map commutes with
/// beta on both sides.
CheckReport check_beta_commutes(const WMap& map, const CheckConfig& cfg);
/// pi_1 intertwines beta with plain algebra evaluation.
CheckReport check_pi1_commutes(const WAlgebra& w, const CheckConfig& cfg);

/// The square W(A, N_g) -> W(B, N) over g is cartesian: given
/// q: Q -> W(B, N) and f: Q -> A with f;g = pi_1 o q (checked, else
/// CommutingConditionError), there is exactly one psi: Q -> W(A, N_g) with
/// pi_1 o psi = f and W(g (+) 1) o psi = q; returns that factorization.
WAlgebraMap check_cartesian(const AlgebraMap& g, const WAlgebraMap& q,
                            const AlgebraMap& f);

}  // namespace kahler
