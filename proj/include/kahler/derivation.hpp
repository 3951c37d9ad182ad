#pragma once

#include <functional>

#include "kahler/algebra.hpp"
#include "kahler/module.hpp"
#include "kahler/report.hpp"

namespace kahler {

// A derivation on a finitely presented algebra A, valued in an A-module M,
// is stored by its images on the generators and extended everywhere by the
// chain rule D(p) = sum_i nu(dp/dx_i) . D(x_i).  This extension is
// well-defined exactly when every relation maps to zero, and checking the
// reduced ideal basis suffices: the chain-rule formula obeys Leibniz, so on
// q*f with f a relation it contributes nu(q).D(f) + nu(f).D(q), and both
// summands die (the first by the basis check, the second because nu(f) = 0).

/// Extend generator images through the chain rule.
ModuleElement chain_rule_apply(const AlgebraPtr& a, const ModulePtr& m,
                               const std::vector<ModuleElement>& images,
                               const Poly& p);

class Derivation {
 public:
  /// Validates arity, owners, and relation compatibility; throws
  /// RelationViolation naming the first offending relation.
  static Derivation make(AlgebraPtr source, ModulePtr target,
                         std::vector<ModuleElement> images);
  static Derivation zero(AlgebraPtr source, ModulePtr target);

  const AlgebraPtr& source() const { return source_; }
  const ModulePtr& target() const { return target_; }
  const std::vector<ModuleElement>& images() const { return images_; }

  ModuleElement apply(const AlgebraElement& a) const;
  /// Apply to a raw polynomial over the source context (nu is implicit).
  ModuleElement apply_poly(const Poly& p) const;

  bool operator==(const Derivation& o) const;
  std::string to_string() const;

 private:
  Derivation(AlgebraPtr source, ModulePtr target,
             std::vector<ModuleElement> images)
      : source_(std::move(source)),
        target_(std::move(target)),
        images_(std::move(images)) {}

  AlgebraPtr source_;
  ModulePtr target_;
  std::vector<ModuleElement> images_;
};

/// Non-throwing version of the relation check Derivation::make performs;
/// one failure per violated basis relation.
CheckReport check_derivation_relations(const AlgebraPtr& source,
                                       const ModulePtr& target,
                                       const std::vector<ModuleElement>& images);

/// A black-box map A -> M to be tested against the derivation laws.  Unlike
/// Derivation, nothing is validated up front, so deliberately broken maps
/// can be probed for counterexamples.
struct DerivationCandidate {
  AlgebraPtr source;
  ModulePtr target;
  std::function<ModuleElement(const AlgebraElement&)> map;
  std::string label;

  static DerivationCandidate of(const Derivation& d, std::string label);
  static DerivationCandidate from_function(
      AlgebraPtr source, ModulePtr target,
      std::function<ModuleElement(const AlgebraElement&)> map,
      std::string label);
};

/// Additivity and vanishing on scalars.
CheckReport check_derivation_linear(const DerivationCandidate& cand,
                                    const CheckConfig& cfg);

/// Leibniz rule D(ab) = a.D(b) + b.D(a) over generator pairs, low-degree
/// monomial pairs, and random pairs.
CheckReport check_leibniz(const DerivationCandidate& cand,
                          const CheckConfig& cfg);

/// Beck's condition: <1, D> commutes with the T-algebra structure maps,
/// i.e. D(nu(p)) equals the chain-rule extension of D's generator images
/// for every polynomial p, including the relations themselves.
CheckReport check_beck_T_derivation(const DerivationCandidate& cand,
                                    const CheckConfig& cfg);

/// For each candidate, decide "S-derivation" (linear + Leibniz) and
/// "T-derivation in Beck's sense" (chain-rule compatibility) independently
/// and record a failure when the verdicts disagree.  Both directions of the
/// equivalence are exercised by feeding in valid and broken candidates.
std::vector<CheckReport> check_s_der_equals_der(
    const std::vector<DerivationCandidate>& candidates,
    const CheckConfig& cfg);

/// Pull a derivation d : B -> M back along g : A -> B, landing in M
/// restricted along g.  (d o g is again a derivation; Derivation::make
/// re-verifies this on the presentation.)
Derivation precompose(const AlgebraMap& g, const Derivation& d);

}  // namespace kahler
