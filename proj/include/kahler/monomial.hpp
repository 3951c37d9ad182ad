#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kahler/errors.hpp"

namespace kahler {

/// A monomial in n variables: the exponent vector.  The variable names live
/// in the Context; a Monomial is only meaningful next to one.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t exponent(std::size_t i) const { return e_.at(i); }
  std::uint32_t& operator[](std::size_t i) { return e_.at(i); }
  std::uint32_t operator[](std::size_t i) const { return e_.at(i); }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  std::uint64_t degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// this / o; requires o.divides-free check by the caller (asserts).
  Monomial divided_by(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial&) const = default;

 private:
  void check_arity(const Monomial& o) const;
  std::vector<std::uint32_t> e_;
};

/// Supported monomial orders.  degrevlex is the library default.
enum class MonomialOrder { degrevlex, lex };

MonomialOrder order_from_string(const std::string& s);  // ValidationError
std::string order_to_string(MonomialOrder o);

/// Three-way comparison under `o`: negative if a < b, 0 if equal, positive
/// if a > b.  Both orders are total, multiplicative and have 1 minimal.
int compare(const Monomial& a, const Monomial& b, MonomialOrder o);

}  // namespace kahler
