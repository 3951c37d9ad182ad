#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kahler/errors.hpp"
#include "kahler/field.hpp"
#include "kahler/monomial.hpp"

namespace kahler {

class Context;
using ContextPtr = std::shared_ptr<const Context>;

/// A polynomial context: an ordered, duplicate-free variable list plus the
/// monomial order and coefficient field.  Contexts are immutable and shared;
/// two contexts are interchangeable iff they are structurally equal.
class Context {
 public:
  Context(std::vector<std::string> vars, MonomialOrder order, Field field);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(std::size_t i) const {
    if (i >= vars_.size())
      throw IndexError("variable index " + std::to_string(i) +
                       " out of range (context has " +
                       std::to_string(vars_.size()) + " variables)");
    return vars_[i];
  }
  std::optional<std::size_t> index_of(const std::string& name) const;

  MonomialOrder order() const { return order_; }
  const Field& field() const { return field_; }

  bool operator==(const Context&) const = default;

  /// "x, y over q with degrevlex" — used in error messages.
  std::string describe() const;

 private:
  std::vector<std::string> vars_;
  MonomialOrder order_;
  Field field_;
};

ContextPtr make_context(std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::degrevlex,
                        Field field = Field::rationals());

/// Structural interchangeability of two (possibly distinct) context objects.
bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Throws ContextError unless same_context(a, b).
void require_same_context(const ContextPtr& a, const ContextPtr& b,
                          const char* where);

}  // namespace kahler
