#include "kahler/monomial.hpp"

#include <algorithm>

namespace kahler {

void Monomial::check_arity(const Monomial& o) const {
  if (e_.size() != o.e_.size())
    throw ArityError("monomials over different variable counts: " +
                     std::to_string(e_.size()) + " vs " +
                     std::to_string(o.e_.size()));
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  check_arity(o);
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  check_arity(o);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  check_arity(o);
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (o.e_[i] > e_[i]) throw IndexError("monomial division not exact");
    r.e_[i] -= o.e_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  a.check_arity(b);
  Monomial r(a);
  for (std::size_t i = 0; i < r.e_.size(); ++i)
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  check_arity(o);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

MonomialOrder order_from_string(const std::string& s) {
  if (s == "degrevlex") return MonomialOrder::degrevlex;
  if (s == "lex") return MonomialOrder::lex;
  throw ValidationError("unknown monomial order '" + s + "'");
}

std::string order_to_string(MonomialOrder o) {
  return o == MonomialOrder::degrevlex ? "degrevlex" : "lex";
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder o) {
  if (a.nvars() != b.nvars())
    throw ArityError("comparing monomials over different variable counts");
  switch (o) {
    case MonomialOrder::lex:
      // a > b iff the first nonzero entry of a - b is positive.
      for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case MonomialOrder::degrevlex: {
      // Compare total degree first; on ties a > b iff the last nonzero
      // entry of a - b is negative.
      auto da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;  // unreachable
}

}  // namespace kahler
