#pragma once

#include "kahler/parallel.hpp"
#include "kahler/poly.hpp"
#include "kahler/report.hpp"
#include "kahler/samples.hpp"

namespace kahler {

// The free symmetric algebra on a context C is the polynomial ring over its
// variables; S is a monad whose unit tags a variable as a degree-1
// polynomial and whose multiplication flattens nested polynomials by
// substitution.  The deriving transform d sends p to its gradient, read as
// an element of SC (x) C.

/// The monad unit on variables: eta_C(x_i) as an element of SC.
Poly unit_eta(const ContextPtr& ctx, std::size_t i);

/// A fresh context with k outer variables "t1..tk" matching base's order
/// and field, for bodies of nested polynomials.
ContextPtr outer_context(const ContextPtr& base, std::size_t k);

/// An element of S(SC): a polynomial `body` in k outer variables whose
/// variable j stands for the inner polynomial tags[j].  Tags are pairwise
/// distinct (outer variables index *distinct* basis elements of SC).
struct OuterPoly {
  ContextPtr base;         // context of the tags
  std::vector<Poly> tags;  // distinct, all over `base`
  Poly body;               // over a context with tags.size() variables

  static OuterPoly make(ContextPtr base, std::vector<Poly> tags, Poly body);
  /// Like make, but merges duplicate tags by identifying their outer
  /// variables (needed when maps into SC collide tags).
  static OuterPoly collapse(ContextPtr base, std::vector<Poly> tags,
                            Poly body);
  std::string to_string() const;
};

/// mu: S(SC) -> SC, substitution of the tags into the body.
Poly mu_flatten(const OuterPoly& w);

/// d: SC -> SC (x) C, the gradient (dp/dx_1, ..., dp/dx_n) with the j-th
/// slot read as "(factor) tensor x_j".
std::vector<Poly> deriving_transform(const Poly& p);

/// A linear map C -> D between contexts: images[i][j] is the coefficient of
/// D's j-th variable in the image of C's i-th variable.
struct LinearMap {
  ContextPtr source, target;
  std::vector<std::vector<Scalar>> images;

  static LinearMap make(ContextPtr source, ContextPtr target,
                        std::vector<std::vector<Scalar>> images);
  /// Sf: SC -> SD, substitution by the degree-1 images.
  Poly apply(const Poly& p) const;
  /// The image of variable i as a polynomial over the target.
  Poly image_poly(std::size_t i) const;
};

/// Random nested polynomial with distinct tags.
OuterPoly sample_outer(Sampler& s, const ContextPtr& base,
                       std::size_t max_tags, std::uint32_t max_degree,
                       std::size_t max_terms);

// ===== checkers =============================================================
//
// Each checker sweeps cfg.samples randomized instances (inputs generated
// serially from cfg.seed; the sweep itself may run on OpenMP threads, with
// per-index result slots so reports are identical either way).

/// (d1) d kills the algebra unit, (d2) Leibniz, (d3) d restricted along eta
/// picks out basis slots, (d4) chain rule against mu.
std::vector<CheckReport> check_codifferential_axioms(const ContextPtr& ctx,
                                                     const CheckConfig& cfg);

/// Naturality of d in C: for linear f, d(Sf p) = (Sf (x) f)(d p).
CheckReport check_naturality(const LinearMap& f, const CheckConfig& cfg);

/// Monad laws for S: both unit triangles and associativity on depth-2
/// nests.
std::vector<CheckReport> check_monad_laws(const ContextPtr& ctx,
                                          const CheckConfig& cfg);

/// The alternative characterization of d: the substitution square for the
/// identity monad morphism (the only instance the library supports), plus
/// the laws that force d — agreement on generators extended by the chain
/// rule, a pure Leibniz-recursion route, and vanishing on constants.
std::vector<CheckReport> check_alt_characterization(const ContextPtr& ctx,
                                                    const CheckConfig& cfg);

}  // namespace kahler
