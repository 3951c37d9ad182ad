#include "kahler/context.hpp"

#include <set>

namespace kahler {

namespace {

bool valid_var_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

}  // namespace

Context::Context(std::vector<std::string> vars, MonomialOrder order,
                 Field field)
    : vars_(std::move(vars)), order_(order), field_(field) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!valid_var_name(v))
      throw ValidationError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw ContextError("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> Context::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

std::string Context::describe() const {
  std::string s;
  if (vars_.empty()) s = "(no variables)";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ", ";
    s += vars_[i];
  }
  s += " over " + field_.to_string() + " with " + order_to_string(order_);
  return s;
}

ContextPtr make_context(std::vector<std::string> vars, MonomialOrder order,
                        Field field) {
  return std::make_shared<const Context>(std::move(vars), order, field);
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_context(const ContextPtr& a, const ContextPtr& b,
                          const char* where) {
  if (!same_context(a, b))
    throw ContextError(std::string(where) + ": context mismatch (" +
                       (a ? a->describe() : "null") + " vs " +
                       (b ? b->describe() : "null") + ")");
}

}  // namespace kahler
