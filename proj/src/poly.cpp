#include "kahler/poly.hpp"

#include <algorithm>

namespace kahler {

std::string monomial_to_string(const Context& ctx, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.exponent(i) == 0) continue;
    if (!s.empty()) s += "*";
    s += ctx.var(i);
    if (m.exponent(i) > 1) s += "^" + std::to_string(m.exponent(i));
  }
  return s;
}

void Poly::require_context() const {
  if (!ctx_) throw ContextError("polynomial has no context");
}

Poly Poly::zero(ContextPtr ctx) {
  if (!ctx) throw ContextError("null context");
  return Poly(std::move(ctx));
}

Poly Poly::constant(ContextPtr ctx, const Scalar& c) {
  Poly p = zero(std::move(ctx));
  if (c.field() != p.ctx_->field())
    throw ContextError("constant scalar field mismatch");
  if (!c.is_zero()) p.terms_.emplace_back(Monomial(p.ctx_->nvars()), c);
  return p;
}

Poly Poly::constant(ContextPtr ctx, long long n) {
  Scalar c = Scalar::from_int(ctx->field(), n);
  return constant(std::move(ctx), c);
}

Poly Poly::variable(ContextPtr ctx, std::size_t i) {
  if (!ctx) throw ContextError("null context");
  if (i >= ctx->nvars())
    throw IndexError("variable index " + std::to_string(i) +
                     " out of range (context has " +
                     std::to_string(ctx->nvars()) + " variables)");
  Monomial m(ctx->nvars());
  m[i] = 1;
  Poly p = zero(std::move(ctx));
  p.terms_.emplace_back(std::move(m), Scalar::one(p.ctx_->field()));
  return p;
}

Poly Poly::variable(ContextPtr ctx, const std::string& name) {
  if (!ctx) throw ContextError("null context");
  auto i = ctx->index_of(name);
  if (!i) throw IndexError("unknown variable '" + name + "'");
  return variable(std::move(ctx), *i);
}

Poly Poly::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  Poly p = zero(std::move(ctx));
  const auto order = p.ctx_->order();
  const auto n = p.ctx_->nvars();
  for (const auto& [m, c] : terms) {
    if (m.nvars() != n)
      throw ArityError("term monomial arity mismatch");
    if (c.field() != p.ctx_->field())
      throw ContextError("term coefficient field mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) {
              return compare(a.first, b.first, order) > 0;
            });
  for (auto& [m, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == m)
      p.terms_.back().second += c;
    else
      p.terms_.emplace_back(std::move(m), c);
    if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
  }
  return p;
}

std::uint64_t Poly::degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

const Monomial& Poly::leading_monomial() const {
  if (is_zero()) throw IndexError("leading monomial of zero polynomial");
  return terms_.front().first;
}

const Scalar& Poly::leading_coefficient() const {
  if (is_zero()) throw IndexError("leading coefficient of zero polynomial");
  return terms_.front().second;
}

Scalar Poly::coefficient(const Monomial& m) const {
  require_context();
  for (const auto& [mm, c] : terms_)
    if (mm == m) return c;
  return Scalar::zero(ctx_->field());
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_context(ctx_, o.ctx_, "poly +");
  Poly r(ctx_);
  const auto order = ctx_->order();
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int cmp;
    if (i == terms_.size())
      cmp = -1;
    else if (j == o.terms_.size())
      cmp = 1;
    else
      cmp = compare(terms_[i].first, o.terms_[j].first, order);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar c = terms_[i].second + o.terms_[j].second;
      if (!c.is_zero()) r.terms_.emplace_back(terms_[i].first, c);
      ++i, ++j;
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::times_term(const Scalar& c, const Monomial& m) const {
  require_context();
  if (c.field() != ctx_->field())
    throw ContextError("times_term scalar field mismatch");
  Poly r(ctx_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplicativity of the order keeps the terms sorted.
  for (const auto& [mm, cc] : terms_) {
    Scalar prod = cc * c;
    if (!prod.is_zero()) r.terms_.emplace_back(mm * m, prod);
  }
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  require_context();
  return times_term(c, Monomial(ctx_->nvars()));
}

Poly Poly::operator*(const Poly& o) const {
  require_same_context(ctx_, o.ctx_, "poly *");
  Poly r = Poly::zero(ctx_);
  for (const auto& [m, c] : o.terms_) r += times_term(c, m);
  return r;
}

Poly Poly::pow(std::uint32_t e) const {
  require_context();
  Poly r = constant(ctx_, 1);
  for (std::uint32_t k = 0; k < e; ++k) r *= *this;
  return r;
}

Poly Poly::partial_derivative(std::size_t i) const {
  require_context();
  if (i >= ctx_->nvars())
    throw IndexError("partial_derivative: variable index " +
                     std::to_string(i) + " out of range");
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = m.exponent(i);
    if (e == 0) continue;
    Monomial mm(m);
    mm[i] = e - 1;
    out.emplace_back(std::move(mm), c * Scalar::from_int(ctx_->field(), e));
  }
  return from_terms(ctx_, std::move(out));
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  require_context();
  if (images.size() != ctx_->nvars())
    throw ArityError("substitute: expected " + std::to_string(ctx_->nvars()) +
                     " images, got " + std::to_string(images.size()));
  if (images.empty()) {
    // No variables: the polynomial is constant, over its own context.
    return *this;
  }
  ContextPtr target = images[0].context();
  for (const auto& im : images)
    require_same_context(target, im.context(), "substitute images");
  if (target->field() != ctx_->field())
    throw ContextError("substitute: coefficient field mismatch");
  return eval_poly(*this, images, PolyRing{target});
}

bool Poly::operator==(const Poly& o) const {
  if (!same_context(ctx_, o.ctx_)) return false;
  return terms_ == o.terms_;
}

std::string Poly::to_string() const {
  require_context();
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar a = c;
    if (first) {
      if (a.is_negative()) {
        s += "-";
        a = -a;
      }
    } else {
      if (a.is_negative()) {
        s += " - ";
        a = -a;
      } else {
        s += " + ";
      }
    }
    if (m.is_one()) {
      s += a.to_string();
    } else if (a.is_one()) {
      s += monomial_to_string(*ctx_, m);
    } else {
      s += a.to_string() + "*" + monomial_to_string(*ctx_, m);
    }
    first = false;
  }
  return s;
}

Scalar eval_at(const Poly& p, const std::vector<Scalar>& point) {
  if (!p.context()) throw ContextError("polynomial has no context");
  for (const auto& c : point)
    if (c.field() != p.context()->field())
      throw ContextError("eval_at: point field mismatch");
  return eval_poly(p, point, ScalarRing{p.context()->field()});
}

}  // namespace kahler
