#pragma once

#include <optional>

#include "kahler/algebra.hpp"

namespace kahler {

class ModulePresentation;
using ModulePtr = std::shared_ptr<const ModulePresentation>;

/// An element of a finitely presented module, stored as the canonical
/// module-normal-form representative over the carrier ring (the direct
/// presentation at the end of the restriction chain).
class ModuleElement {
 public:
  ModuleElement() = default;  // placeholder only

  const ModulePtr& owner() const { return owner_; }
  const PolyVec& rep() const { return rep_; }
  bool is_zero() const { return polyvec_is_zero(rep_); }
  std::string to_string() const { return polyvec_to_string(rep_); }

  ModuleElement operator-() const;
  ModuleElement operator+(const ModuleElement& o) const;
  ModuleElement operator-(const ModuleElement& o) const;
  ModuleElement scaled(const Scalar& c) const;
  bool operator==(const ModuleElement& o) const;
  bool operator!=(const ModuleElement& o) const { return !(*this == o); }

 private:
  friend class ModulePresentation;
  ModuleElement(ModulePtr owner, PolyVec rep)
      : owner_(std::move(owner)), rep_(std::move(rep)) {}
  void check_owner(const ModuleElement& o) const;

  ModulePtr owner_;
  PolyVec rep_;
};

/// A module over a finitely presented algebra A, in one of two forms:
///
///  * direct:      A^rank / (relation rows), where the stored relation
///                 submodule is the user rows plus the materialized ideal
///                 rows f*e_i for f in A's reduced relation basis; or
///  * restricted:  N_A for an algebra map g: A -> B and a module N over B.
///                 The action is routed through g intensionally; no direct
///                 presentation over A is computed (by design).
class ModulePresentation
    : public std::enable_shared_from_this<ModulePresentation> {
 public:
  static ModulePtr make(AlgebraPtr algebra, std::size_t rank,
                        std::vector<PolyVec> rows, std::string name = "M",
                        std::size_t pair_cap = kDefaultPairCap);
  static ModulePtr free_module(AlgebraPtr algebra, std::size_t rank,
                               std::string name = "F");
  static ModulePtr restricted(AlgebraMap via, ModulePtr inner,
                              std::string name = "");

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::string& name() const { return name_; }
  bool is_direct() const { return !via_.has_value(); }

  // --- direct presentations only
  std::size_t rank() const;
  /// The rows as given by the caller (before ideal rows are appended).
  const std::vector<PolyVec>& user_rows() const;
  const SubmoduleBasis& relations() const;
  ModuleElement generator(std::size_t i) const;
  std::vector<ModuleElement> generators() const;

  // --- restricted presentations only
  const AlgebraMap& via() const;
  const ModulePtr& inner() const;

  /// The direct presentation at the end of the restriction chain.
  const ModulePresentation& carrier() const;
  std::size_t carrier_rank() const { return carrier().rank(); }
  ContextPtr carrier_context() const {
    return carrier().algebra()->context();
  }

  PolyVec normalize(PolyVec v) const;
  ModuleElement element(PolyVec v) const;
  ModuleElement zero_element() const;
  bool contains_zero_class(const PolyVec& v) const {
    return polyvec_is_zero(normalize(v));
  }

  /// Structural interchangeability.  Direct: same algebra, rank and
  /// relation basis.  Restricted: same map and same inner module; a
  /// restricted presentation is never the same as a direct one.
  bool same_as(const ModulePresentation& o) const;

  /// "module NAME over ALG { rank: r; relations: ...; }" with the user rows
  /// only — parseable back against the same algebra.
  std::string to_string() const;

 private:
  ModulePresentation() = default;

  AlgebraPtr algebra_;
  std::string name_;
  // direct form
  std::size_t rank_ = 0;
  std::vector<PolyVec> user_rows_;
  SubmoduleBasis rel_;
  // restricted form
  std::optional<AlgebraMap> via_;
  ModulePtr inner_;
};

/// The action a . m, routed through the restriction chain.
ModuleElement action(const AlgebraElement& a, const ModuleElement& m);
inline ModuleElement operator*(const AlgebraElement& a,
                               const ModuleElement& m) {
  return action(a, m);
}

/// Free-function restriction of scalars along g: A -> B.
ModulePtr restrict_scalars(const AlgebraMap& via, ModulePtr inner,
                           std::string name = "");

void require_same_module(const ModulePtr& a, const ModulePtr& b,
                         const char* where);

/// A map of A-modules M -> N given by generator images (M must be direct).
/// Construction validates that every user relation row of M maps to zero;
/// ideal rows are killed automatically because N is an A-module.
class ModuleMap {
 public:
  ModuleMap() = default;  // placeholder only

  static ModuleMap make(ModulePtr source, ModulePtr target,
                        std::vector<ModuleElement> images);
  static ModuleMap identity(const ModulePtr& m);
  static ModuleMap zero_map(ModulePtr source, ModulePtr target);

  const ModulePtr& source() const { return source_; }
  const ModulePtr& target() const { return target_; }
  const std::vector<ModuleElement>& images() const { return images_; }

  ModuleElement apply(const ModuleElement& m) const;

  bool operator==(const ModuleMap& o) const;
  bool operator!=(const ModuleMap& o) const { return !(*this == o); }

 private:
  ModulePtr source_, target_;
  std::vector<ModuleElement> images_;
};

/// Diagrammatic composition: first g: M -> N, then h: N -> P.
ModuleMap compose(const ModuleMap& g, const ModuleMap& h);

/// Non-throwing validation; one failure entry per surviving relation row.
CheckReport check_module_map(const ModulePtr& source, const ModulePtr& target,
                             const std::vector<ModuleElement>& images);

/// M (+) N with its injections and projections.
struct DirectSum {
  ModulePtr module;
  ModuleMap inject_left, inject_right;
  ModuleMap project_left, project_right;
};
DirectSum direct_sum(const ModulePtr& left, const ModulePtr& right,
                     std::string name = "");

}  // namespace kahler
