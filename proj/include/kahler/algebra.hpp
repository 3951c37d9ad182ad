#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kahler/groebner.hpp"
#include "kahler/report.hpp"

namespace kahler {

class AlgebraPresentation;
using AlgebraPtr = std::shared_ptr<const AlgebraPresentation>;

/// An element of a finitely presented algebra, stored as the canonical
/// normal-form representative of its class.  Structural equality of reps is
/// therefore semantic equality in the quotient.
class AlgebraElement {
 public:
  AlgebraElement() = default;  // placeholder only

  const AlgebraPtr& owner() const { return owner_; }
  const Poly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  std::string to_string() const { return rep_.to_string(); }

  AlgebraElement operator-() const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement scaled(const Scalar& c) const;
  AlgebraElement pow(std::uint32_t e) const;
  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

 private:
  friend class AlgebraPresentation;
  AlgebraElement(AlgebraPtr owner, Poly rep)
      : owner_(std::move(owner)), rep_(std::move(rep)) {}
  void check_owner(const AlgebraElement& o) const;

  AlgebraPtr owner_;
  Poly rep_;
};

/// A finitely presented commutative algebra k[x_1..x_n]/I.  Presenting the
/// unit ideal is permitted but flagged as the zero algebra.
class AlgebraPresentation
    : public std::enable_shared_from_this<AlgebraPresentation> {
 public:
  static AlgebraPtr make(std::string name, ContextPtr ctx,
                         std::vector<Poly> relations,
                         std::size_t pair_cap = kDefaultPairCap);
  /// k[vars] with no relations.
  static AlgebraPtr free(std::string name, ContextPtr ctx);

  const std::string& name() const { return name_; }
  const ContextPtr& context() const { return ctx_; }
  std::size_t nvars() const { return ctx_->nvars(); }
  const Ideal& relations() const { return relations_; }
  bool is_zero_algebra() const { return zero_; }

  /// The structure map nu: free algebra -> A (reduce to normal form).
  AlgebraElement nu(const Poly& p) const;
  AlgebraElement from_scalar(const Scalar& c) const;
  AlgebraElement one() const;
  AlgebraElement zero_element() const;
  AlgebraElement generator(std::size_t i) const;
  std::vector<AlgebraElement> generators() const;

  /// Structural interchangeability: same context and same reduced relation
  /// basis.  Names are labels and do not participate.
  bool same_as(const AlgebraPresentation& o) const;

  /// "algebra NAME { vars: ...; relations: ...; }" — parseable back.
  std::string to_string() const;

 private:
  AlgebraPresentation() = default;

  std::string name_;
  ContextPtr ctx_;
  Ideal relations_;
  bool zero_ = false;
};

/// Free-function alias for the structure map.
AlgebraElement structure_map_nu(const AlgebraPtr& a, const Poly& p);

/// The product routed through the T-algebra structure: lift the canonical
/// representatives to the free algebra, multiply there, push through nu.
AlgebraElement mul_from_T_structure(const AlgebraElement& a,
                                    const AlgebraElement& b);

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b,
                          const char* where);

/// Ring adapter over an algebra, for eval_poly.
struct AlgebraRing {
  AlgebraPtr a;
  using Elem = AlgebraElement;
  Elem zero() const { return a->zero_element(); }
  Elem from_scalar(const Scalar& c) const { return a->from_scalar(c); }
  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
};

/// An algebra map A -> B determined by generator images; construction
/// validates that every defining relation of A maps to zero in B.
class AlgebraMap {
 public:
  AlgebraMap() = default;  // placeholder only

  /// Throws RelationViolation when some relation survives; ArityError /
  /// ContextError on malformed input.
  static AlgebraMap make(AlgebraPtr source, AlgebraPtr target,
                         std::vector<AlgebraElement> images);
  static AlgebraMap identity(const AlgebraPtr& a);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const std::vector<AlgebraElement>& images() const { return images_; }

  AlgebraElement apply(const AlgebraElement& x) const;
  /// Image of a raw polynomial over the source context.
  AlgebraElement apply_poly(const Poly& p) const;

  bool is_identity() const;
  bool operator==(const AlgebraMap& o) const;
  bool operator!=(const AlgebraMap& o) const { return !(*this == o); }

 private:
  AlgebraPtr source_, target_;
  std::vector<AlgebraElement> images_;
};

/// Diagrammatic composition: first g: A -> B, then h: B -> C.
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& h);

/// Non-throwing validation of candidate generator images; one failure entry
/// per surviving relation (input = relation, lhs = its image, rhs = "0").
CheckReport check_algebra_map(const AlgebraPtr& source,
                              const AlgebraPtr& target,
                              const std::vector<AlgebraElement>& images);

}  // namespace kahler
