#include "kahler/groebner.hpp"

#include <algorithm>
#include <list>

namespace kahler {

namespace {

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading_coefficient().inverse());
}

/// One term as a polynomial, for moving leading terms into remainders.
Poly term_poly(const ContextPtr& ctx, const Monomial& m, const Scalar& c) {
  return Poly::from_terms(ctx, {{m, c}});
}

Poly divide_full(const Poly& p, const std::vector<Poly>& basis) {
  const ContextPtr& ctx = p.context();
  Poly h = p;
  Poly r = Poly::zero(ctx);
  while (!h.is_zero()) {
    const Monomial& m = h.leading_monomial();
    const Scalar& c = h.leading_coefficient();
    bool reduced = false;
    for (const Poly& g : basis) {
      if (g.leading_monomial().divides(m)) {
        h -= g.times_term(c / g.leading_coefficient(),
                          m.divided_by(g.leading_monomial()));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      const Poly t = term_poly(ctx, m, c);
      r += t;
      h -= t;
    }
  }
  return r;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

/// Normal selection strategy: smallest lcm first, ties by index pair.
std::size_t pick_pair(const std::vector<Pair>& pairs, MonomialOrder order) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    const int cmp = compare(pairs[k].lcm, pairs[best].lcm, order);
    if (cmp < 0 ||
        (cmp == 0 && std::pair(pairs[k].i, pairs[k].j) <
                         std::pair(pairs[best].i, pairs[best].j)))
      best = k;
  }
  return best;
}

}  // namespace

// ===== ideal buchberger =====================================================

Ideal Ideal::of(ContextPtr ctx, std::vector<Poly> generators,
                std::size_t pair_cap) {
  if (!ctx) throw ContextError("Ideal: null context");
  for (const auto& g : generators)
    require_same_context(ctx, g.context(), "ideal generators");

  Ideal ideal;
  ideal.ctx_ = ctx;
  ideal.generators_ = generators;

  std::vector<Poly> basis;
  for (const auto& g : generators)
    if (!g.is_zero()) basis.push_back(make_monic(g));

  const MonomialOrder order = ctx->order();
  std::vector<Pair> pairs;
  std::size_t enqueued = 0;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pairs.push_back({i, j,
                       Monomial::lcm(basis[i].leading_monomial(),
                                     basis[j].leading_monomial())});
      if (++enqueued > pair_cap)
        throw ResourceError("buchberger: pair cap of " +
                            std::to_string(pair_cap) + " exceeded");
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    const std::size_t k = pick_pair(pairs, order);
    const Pair pr = pairs[k];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
    const Poly& f = basis[pr.i];
    const Poly& g = basis[pr.j];
    // Buchberger's coprime-lcm criterion (sound for ideals).
    if (f.leading_monomial().coprime(g.leading_monomial())) continue;
    const Poly spoly =
        f.times_term(Scalar::one(ctx->field()),
                     pr.lcm.divided_by(f.leading_monomial())) -
        g.times_term(Scalar::one(ctx->field()),
                     pr.lcm.divided_by(g.leading_monomial()));
    const Poly r = divide_full(spoly, basis);
    if (!r.is_zero()) {
      basis.push_back(make_monic(r));
      push_pairs(basis.size() - 1);
    }
  }

  // Auto-reduce to the unique reduced basis: every element fully reduced
  // against the others, monic, sorted ascending by leading monomial.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Poly> others;
      others.reserve(basis.size() - 1);
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      const Poly r = divide_full(basis[i], others);
      if (r != basis[i]) {
        changed = true;
        if (r.is_zero()) {
          basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
        } else {
          basis[i] = make_monic(r);
        }
      }
    }
  }
  std::sort(basis.begin(), basis.end(), [order](const Poly& a, const Poly& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  ideal.basis_ = std::move(basis);
  return ideal;
}

Poly Ideal::normal_form(const Poly& p) const {
  if (!ctx_) throw ContextError("normal_form on a default-constructed Ideal");
  require_same_context(ctx_, p.context(), "normal_form");
  return divide_full(p, basis_);
}

bool Ideal::is_unit_ideal() const {
  return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

Ideal buchberger(const ContextPtr& ctx, std::vector<Poly> generators,
                 std::size_t pair_cap) {
  return Ideal::of(ctx, std::move(generators), pair_cap);
}

Poly normal_form(const Poly& p, const Ideal& ideal) {
  return ideal.normal_form(p);
}

// ===== polyvec helpers ======================================================

bool polyvec_is_zero(const PolyVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

PolyVec polyvec_zero(const ContextPtr& ctx, std::size_t rank) {
  return PolyVec(rank, Poly::zero(ctx));
}

PolyVec polyvec_add(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) throw RankError("polyvec_add: rank mismatch");
  PolyVec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

PolyVec polyvec_sub(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) throw RankError("polyvec_sub: rank mismatch");
  PolyVec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

PolyVec polyvec_neg(const PolyVec& a) {
  PolyVec r;
  r.reserve(a.size());
  for (const auto& p : a) r.push_back(-p);
  return r;
}

PolyVec polyvec_scale(const PolyVec& a, const Poly& p) {
  PolyVec r;
  r.reserve(a.size());
  for (const auto& q : a) r.push_back(q * p);
  return r;
}

PolyVec polyvec_times_term(const PolyVec& a, const Scalar& c,
                           const Monomial& m) {
  PolyVec r;
  r.reserve(a.size());
  for (const auto& q : a) r.push_back(q.times_term(c, m));
  return r;
}

std::string polyvec_to_string(const PolyVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

std::optional<ModuleTerm> leading_module_term(const PolyVec& v) {
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    if (!v[pos].is_zero())
      return ModuleTerm{pos, v[pos].leading_monomial(),
                        v[pos].leading_coefficient()};
  }
  return std::nullopt;
}

// ===== module buchberger ====================================================

namespace {

PolyVec module_make_monic(const PolyVec& v) {
  const auto lt = leading_module_term(v);
  if (!lt) return v;
  PolyVec r;
  r.reserve(v.size());
  const Scalar inv = lt->coeff.inverse();
  for (const auto& p : v) r.push_back(p.scaled(inv));
  return r;
}

PolyVec module_divide_full(const PolyVec& v,
                           const std::vector<PolyVec>& basis,
                           const ContextPtr& ctx) {
  PolyVec h = v;
  PolyVec r = polyvec_zero(ctx, v.size());
  for (;;) {
    const auto lt = leading_module_term(h);
    if (!lt) break;
    bool reduced = false;
    for (const auto& b : basis) {
      const auto bl = leading_module_term(b);
      if (!bl) continue;
      if (bl->pos == lt->pos && bl->mono.divides(lt->mono)) {
        h = polyvec_sub(h, polyvec_times_term(b, lt->coeff / bl->coeff,
                                              lt->mono.divided_by(bl->mono)));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      const Poly t = Poly::from_terms(ctx, {{lt->mono, lt->coeff}});
      r[lt->pos] += t;
      h[lt->pos] -= t;
    }
  }
  return r;
}

}  // namespace

void SubmoduleBasis::check_row(const PolyVec& v) const {
  if (v.size() != rank_)
    throw RankError("module row has " + std::to_string(v.size()) +
                    " components, expected " + std::to_string(rank_));
  for (const auto& p : v)
    require_same_context(ctx_, p.context(), "module row");
}

SubmoduleBasis SubmoduleBasis::of(ContextPtr ctx, std::size_t rank,
                                  std::vector<PolyVec> rows,
                                  std::size_t pair_cap) {
  if (!ctx) throw ContextError("SubmoduleBasis: null context");
  SubmoduleBasis out;
  out.ctx_ = ctx;
  out.rank_ = rank;
  for (const auto& row : rows) out.check_row(row);
  out.rows_ = rows;

  std::vector<PolyVec> basis;
  for (const auto& row : rows)
    if (!polyvec_is_zero(row)) basis.push_back(module_make_monic(row));

  const MonomialOrder order = ctx->order();
  std::vector<Pair> pairs;
  std::size_t enqueued = 0;
  auto push_pairs = [&](std::size_t j) {
    const auto lj = leading_module_term(basis[j]);
    for (std::size_t i = 0; i < j; ++i) {
      const auto li = leading_module_term(basis[i]);
      if (li->pos != lj->pos) continue;  // S-vectors need a common position
      pairs.push_back({i, j, Monomial::lcm(li->mono, lj->mono)});
      if (++enqueued > pair_cap)
        throw ResourceError("module_buchberger: pair cap of " +
                            std::to_string(pair_cap) + " exceeded");
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    const std::size_t k = pick_pair(pairs, order);
    const Pair pr = pairs[k];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
    const auto li = leading_module_term(basis[pr.i]);
    const auto lj = leading_module_term(basis[pr.j]);
    const Scalar one = Scalar::one(ctx->field());
    const PolyVec svec = polyvec_sub(
        polyvec_times_term(basis[pr.i], one,
                           pr.lcm.divided_by(li->mono)),
        polyvec_times_term(basis[pr.j], one,
                           pr.lcm.divided_by(lj->mono)));
    const PolyVec r = module_divide_full(svec, basis, ctx);
    if (!polyvec_is_zero(r)) {
      basis.push_back(module_make_monic(r));
      push_pairs(basis.size() - 1);
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<PolyVec> others;
      others.reserve(basis.size() - 1);
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      const PolyVec r = module_divide_full(basis[i], others, ctx);
      if (r != basis[i]) {
        changed = true;
        if (polyvec_is_zero(r)) {
          basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
        } else {
          basis[i] = module_make_monic(r);
        }
      }
    }
  }
  std::sort(basis.begin(), basis.end(),
            [order](const PolyVec& a, const PolyVec& b) {
              const auto la = leading_module_term(a);
              const auto lb = leading_module_term(b);
              if (la->pos != lb->pos) return la->pos > lb->pos;
              return compare(la->mono, lb->mono, order) < 0;
            });
  out.basis_ = std::move(basis);
  return out;
}

PolyVec SubmoduleBasis::normal_form(const PolyVec& v) const {
  if (!ctx_)
    throw ContextError("normal_form on a default-constructed SubmoduleBasis");
  check_row(v);
  return module_divide_full(v, basis_, ctx_);
}

SubmoduleBasis module_buchberger(const ContextPtr& ctx, std::size_t rank,
                                 std::vector<PolyVec> rows,
                                 std::size_t pair_cap) {
  return SubmoduleBasis::of(ctx, rank, std::move(rows), pair_cap);
}

PolyVec module_normal_form(const PolyVec& v, const SubmoduleBasis& basis) {
  return basis.normal_form(v);
}

}  // namespace kahler
