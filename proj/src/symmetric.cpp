#include "kahler/symmetric.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "kahler/errors.hpp"
#include "kahler/groebner.hpp"

namespace kahler {

namespace {

// Sweep a fixed input list, one result slot per index, so serial and
// OpenMP runs aggregate the same report.
template <typename Input, typename Fn>
CheckReport run_sweep(std::string axiom, const CheckConfig& cfg,
                      const std::vector<Input>& inputs, Fn&& fn) {
  CheckReport report;
  report.axiom = std::move(axiom);
  report.seed = cfg.seed;
  report.samples = inputs.size();
  std::vector<std::optional<CheckFailure>> slots(inputs.size());
  parallel_for(
      inputs.size(), [&](std::size_t i) { slots[i] = fn(inputs[i]); },
      cfg.parallel);
  for (auto& slot : slots) {
    if (slot) report.failures.push_back(std::move(*slot));
  }
  return report;
}

Poly rename_into(const Poly& p, const ContextPtr& target) {
  // Substitute the i-th variable of p's context by the i-th of target.
  const std::size_t n = p.context()->nvars();
  if (n == 0) {
    return p.is_zero() ? Poly::zero(target)
                       : Poly::constant(target, p.leading_coefficient());
  }
  std::vector<Poly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(Poly::variable(target, i));
  return p.substitute(images);
}

std::vector<Poly> gradient_times(const Poly& factor,
                                 const std::vector<Poly>& grad) {
  std::vector<Poly> out;
  out.reserve(grad.size());
  for (const auto& g : grad) out.push_back(factor * g);
  return out;
}

std::vector<Poly> vec_add(const std::vector<Poly>& a,
                          const std::vector<Poly>& b) {
  std::vector<Poly> out;
  out.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out.push_back(a[j] + b[j]);
  return out;
}

// Gradient by pure Leibniz recursion on monomials: peel one variable at a
// time, never using the exponent rule.  Second route for the alternative
// characterization.
std::vector<Poly> leibniz_gradient_monomial(const ContextPtr& ctx,
                                            const Monomial& m) {
  const std::size_t n = ctx->nvars();
  std::vector<Poly> grad(n, Poly::zero(ctx));
  for (std::size_t j = 0; j < n; ++j) {
    if (m.exponent(j) == 0) continue;
    std::vector<std::uint32_t> rest_exp(n, 0);
    for (std::size_t k = 0; k < n; ++k) rest_exp[k] = m.exponent(k);
    rest_exp[j] -= 1;
    Monomial rest(rest_exp);
    Poly xj = Poly::variable(ctx, j);
    Poly rest_poly =
        Poly::from_terms(ctx, {{rest, Scalar::from_int(ctx->field(), 1)}});
    auto inner = leibniz_gradient_monomial(ctx, rest);
    auto scaled = gradient_times(xj, inner);
    scaled[j] = scaled[j] + rest_poly;
    grad = vec_add(grad, scaled);
    return grad;  // d(x_j * rest) fully accounts for m
  }
  return grad;  // m == 1
}

std::vector<Poly> leibniz_gradient(const Poly& p) {
  const auto& ctx = p.context();
  std::vector<Poly> grad(ctx->nvars(), Poly::zero(ctx));
  for (const auto& [mono, coeff] : p.terms()) {
    auto g = leibniz_gradient_monomial(ctx, mono);
    for (std::size_t j = 0; j < g.size(); ++j)
      grad[j] = grad[j] + g[j].scaled(coeff);
  }
  return grad;
}

}  // namespace

// ===== monad pieces =========================================================

Poly unit_eta(const ContextPtr& ctx, std::size_t i) {
  return Poly::variable(ctx, i);
}

ContextPtr outer_context(const ContextPtr& base, std::size_t k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 0; i < k; ++i) names.push_back("t" + std::to_string(i + 1));
  return make_context(names, base->order(), base->field());
}

OuterPoly OuterPoly::make(ContextPtr base, std::vector<Poly> tags, Poly body) {
  if (!base) throw ContextError("outer polynomial needs a base context");
  for (const auto& t : tags)
    require_same_context(t.context(), base, "outer polynomial tag");
  for (std::size_t i = 0; i < tags.size(); ++i)
    for (std::size_t j = i + 1; j < tags.size(); ++j)
      if (tags[i] == tags[j])
        throw ContextError("duplicate tag in outer polynomial (use collapse)");
  if (body.context()->nvars() != tags.size())
    throw ArityError("outer body has " +
                     std::to_string(body.context()->nvars()) +
                     " variables for " + std::to_string(tags.size()) + " tags");
  if (!(body.context()->field() == base->field()))
    throw ContextError("outer body field differs from base field");
  return OuterPoly{std::move(base), std::move(tags), std::move(body)};
}

OuterPoly OuterPoly::collapse(ContextPtr base, std::vector<Poly> tags,
                              Poly body) {
  std::vector<Poly> unique;
  std::vector<std::size_t> remap(tags.size());
  for (std::size_t i = 0; i < tags.size(); ++i) {
    std::size_t at = unique.size();
    for (std::size_t u = 0; u < unique.size(); ++u)
      if (unique[u] == tags[i]) {
        at = u;
        break;
      }
    if (at == unique.size()) unique.push_back(tags[i]);
    remap[i] = at;
  }
  ContextPtr merged = outer_context(base, unique.size());
  Poly new_body = Poly::zero(merged);
  if (tags.empty()) {
    new_body = rename_into(body, merged);
  } else {
    std::vector<Poly> images;
    images.reserve(tags.size());
    for (std::size_t i = 0; i < tags.size(); ++i)
      images.push_back(Poly::variable(merged, remap[i]));
    new_body = body.substitute(images);
  }
  return make(std::move(base), std::move(unique), std::move(new_body));
}

std::string OuterPoly::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i) out << ", ";
    out << body.context()->var(i) << " := " << tags[i].to_string();
  }
  out << "] " << body.to_string();
  return out.str();
}

Poly mu_flatten(const OuterPoly& w) {
  if (w.tags.empty()) return rename_into(w.body, w.base);
  return w.body.substitute(w.tags);
}

std::vector<Poly> deriving_transform(const Poly& p) {
  std::vector<Poly> grad;
  const std::size_t n = p.context()->nvars();
  grad.reserve(n);
  for (std::size_t i = 0; i < n; ++i) grad.push_back(p.partial_derivative(i));
  return grad;
}

// ===== linear maps ==========================================================

LinearMap LinearMap::make(ContextPtr source, ContextPtr target,
                          std::vector<std::vector<Scalar>> images) {
  if (!source || !target) throw ContextError("linear map needs contexts");
  if (!(source->field() == target->field()))
    throw ContextError("linear map between different fields");
  if (images.size() != source->nvars())
    throw ShapeError("linear map has " + std::to_string(images.size()) +
                     " rows for " + std::to_string(source->nvars()) +
                     " source variables");
  for (const auto& row : images) {
    if (row.size() != target->nvars())
      throw ShapeError("linear map row has " + std::to_string(row.size()) +
                       " entries for " + std::to_string(target->nvars()) +
                       " target variables");
    for (const auto& c : row)
      if (!(c.field() == source->field()))
        throw ContextError("linear map coefficient in wrong field");
  }
  return LinearMap{std::move(source), std::move(target), std::move(images)};
}

Poly LinearMap::image_poly(std::size_t i) const {
  if (i >= images.size()) throw IndexError("linear map image index");
  Poly out = Poly::zero(target);
  for (std::size_t j = 0; j < images[i].size(); ++j)
    out = out + Poly::variable(target, j).scaled(images[i][j]);
  return out;
}

Poly LinearMap::apply(const Poly& p) const {
  require_same_context(p.context(), source, "linear map application");
  if (source->nvars() == 0) return rename_into(p, target);
  std::vector<Poly> imgs;
  imgs.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) imgs.push_back(image_poly(i));
  return p.substitute(imgs);
}

// ===== sampling =============================================================

OuterPoly sample_outer(Sampler& s, const ContextPtr& base,
                       std::size_t max_tags, std::uint32_t max_degree,
                       std::size_t max_terms) {
  const std::size_t k = s.int_in(1, static_cast<long>(max_tags));
  std::vector<Poly> tags;
  tags.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Poly t = s.poly(base, max_degree, max_terms);
    // nudge until distinct from earlier tags
    int guard = 0;
    while (std::find(tags.begin(), tags.end(), t) != tags.end()) {
      t = t + Poly::constant(base,
                             Scalar::from_int(base->field(), ++guard + 10));
    }
    tags.push_back(t);
  }
  ContextPtr outer = outer_context(base, k);
  Poly body = s.poly(outer, max_degree, max_terms);
  return OuterPoly::make(base, std::move(tags), std::move(body));
}

// ===== checkers =============================================================

std::vector<CheckReport> check_codifferential_axioms(const ContextPtr& ctx,
                                                     const CheckConfig& cfg) {
  Sampler s(cfg.seed);
  const std::size_t n = ctx->nvars();

  // (d1): d annihilates the unit of the algebra SC (constants).
  std::vector<Scalar> d1_inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    d1_inputs.push_back(s.scalar(ctx->field()));
  CheckReport d1 = run_sweep(
      "d1", cfg, d1_inputs, [&](const Scalar& c) -> std::optional<CheckFailure> {
        auto grad = deriving_transform(Poly::constant(ctx, c));
        if (polyvec_is_zero(grad)) return std::nullopt;
        return CheckFailure{c.to_string(), polyvec_to_string(grad),
                            polyvec_to_string(polyvec_zero(ctx, n))};
      });

  // (d2): Leibniz rule d(pq) = p d(q) + q d(p).
  std::vector<std::pair<Poly, Poly>> d2_inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    d2_inputs.emplace_back(s.poly(ctx, cfg.max_degree, cfg.max_terms),
                           s.poly(ctx, cfg.max_degree, cfg.max_terms));
  CheckReport d2 = run_sweep(
      "d2", cfg, d2_inputs,
      [&](const std::pair<Poly, Poly>& in) -> std::optional<CheckFailure> {
        const auto& [p, q] = in;
        auto lhs = deriving_transform(p * q);
        auto rhs = vec_add(gradient_times(p, deriving_transform(q)),
                           gradient_times(q, deriving_transform(p)));
        if (lhs == rhs) return std::nullopt;
        return CheckFailure{"p = " + p.to_string() + ", q = " + q.to_string(),
                            polyvec_to_string(lhs), polyvec_to_string(rhs)};
      });

  // (d3): composing eta with d picks out the basis slot of the variable.
  std::vector<std::size_t> d3_inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    d3_inputs.push_back(n == 0 ? 0 : s.index(n));
  CheckReport d3 = run_sweep(
      "d3", cfg, d3_inputs, [&](std::size_t i) -> std::optional<CheckFailure> {
        if (n == 0) return std::nullopt;  // nothing to check in an empty context
        auto grad = deriving_transform(unit_eta(ctx, i));
        auto want = polyvec_zero(ctx, n);
        want[i] = Poly::constant(ctx, Scalar::from_int(ctx->field(), 1));
        if (grad == want) return std::nullopt;
        return CheckFailure{ctx->var(i), polyvec_to_string(grad),
                            polyvec_to_string(want)};
      });

  // (d4): chain rule, d(mu(w)) = sum_l (d body/d t_l)[tags] * d(tag_l).
  std::vector<OuterPoly> d4_inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    d4_inputs.push_back(
        sample_outer(s, ctx, 3, cfg.max_degree, cfg.max_terms));
  CheckReport d4 = run_sweep(
      "d4", cfg, d4_inputs,
      [&](const OuterPoly& w) -> std::optional<CheckFailure> {
        auto lhs = deriving_transform(mu_flatten(w));
        auto rhs = polyvec_zero(ctx, n);
        for (std::size_t l = 0; l < w.tags.size(); ++l) {
          Poly outer_partial = w.body.partial_derivative(l);
          Poly factor = outer_partial.substitute(w.tags);
          rhs = vec_add(rhs, gradient_times(factor,
                                            deriving_transform(w.tags[l])));
        }
        if (lhs == rhs) return std::nullopt;
        return CheckFailure{w.to_string(), polyvec_to_string(lhs),
                            polyvec_to_string(rhs)};
      });

  return {std::move(d1), std::move(d2), std::move(d3), std::move(d4)};
}

CheckReport check_naturality(const LinearMap& f, const CheckConfig& cfg) {
  Sampler s(cfg.seed);
  std::vector<Poly> inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    inputs.push_back(s.poly(f.source, cfg.max_degree, cfg.max_terms));
  return run_sweep(
      "naturality", cfg, inputs,
      [&](const Poly& p) -> std::optional<CheckFailure> {
        auto lhs = deriving_transform(f.apply(p));
        auto grad = deriving_transform(p);
        std::vector<Poly> rhs(f.target->nvars(), Poly::zero(f.target));
        for (std::size_t i = 0; i < f.source->nvars(); ++i) {
          Poly mapped = f.apply(grad[i]);
          for (std::size_t j = 0; j < f.target->nvars(); ++j)
            rhs[j] = rhs[j] + mapped.scaled(f.images[i][j]);
        }
        if (lhs == rhs) return std::nullopt;
        return CheckFailure{p.to_string(), polyvec_to_string(lhs),
                            polyvec_to_string(rhs)};
      });
}

std::vector<CheckReport> check_monad_laws(const ContextPtr& ctx,
                                          const CheckConfig& cfg) {
  Sampler s(cfg.seed);
  const std::size_t n = ctx->nvars();

  // mu . eta_{SC} = id: tag the whole polynomial, body one outer variable.
  std::vector<Poly> left_inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    left_inputs.push_back(s.poly(ctx, cfg.max_degree, cfg.max_terms));
  CheckReport unit_left = run_sweep(
      "monad-unit-left", cfg, left_inputs,
      [&](const Poly& p) -> std::optional<CheckFailure> {
        ContextPtr outer = outer_context(ctx, 1);
        OuterPoly w =
            OuterPoly::make(ctx, {p}, Poly::variable(outer, 0));
        Poly back = mu_flatten(w);
        if (back == p) return std::nullopt;
        return CheckFailure{p.to_string(), back.to_string(), p.to_string()};
      });

  // mu . S(eta) = id: tags are the variables, body the polynomial renamed.
  std::vector<Poly> right_inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    right_inputs.push_back(s.poly(ctx, cfg.max_degree, cfg.max_terms));
  CheckReport unit_right = run_sweep(
      "monad-unit-right", cfg, right_inputs,
      [&](const Poly& p) -> std::optional<CheckFailure> {
        std::vector<Poly> tags;
        tags.reserve(n);
        for (std::size_t i = 0; i < n; ++i) tags.push_back(unit_eta(ctx, i));
        ContextPtr outer = outer_context(ctx, n);
        OuterPoly w = OuterPoly::make(ctx, tags, rename_into(p, outer));
        Poly back = mu_flatten(w);
        if (back == p) return std::nullopt;
        return CheckFailure{p.to_string(), back.to_string(), p.to_string()};
      });

  // Associativity on depth-2 nests: flatten inner layers first (collapsing
  // colliding tags), or merge the outer layers first; same polynomial.
  struct Nest {
    std::vector<OuterPoly> inners;
    Poly big_body;  // over outer_context(ctx, inners.size())
  };
  std::vector<Nest> nests;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t K = s.int_in(1, 3);
    std::vector<OuterPoly> inners;
    for (std::size_t k = 0; k < K; ++k)
      inners.push_back(sample_outer(s, ctx, 2, cfg.max_degree, 3));
    ContextPtr big = outer_context(ctx, K);
    nests.push_back({std::move(inners), s.poly(big, 3, 3)});
  }
  CheckReport assoc = run_sweep(
      "monad-assoc", cfg, nests,
      [&](const Nest& nest) -> std::optional<CheckFailure> {
        // route 1: S(mu) then mu — inner flats can coincide, so collapse
        std::vector<Poly> flats;
        for (const auto& w : nest.inners) flats.push_back(mu_flatten(w));
        Poly via_inner =
            mu_flatten(OuterPoly::collapse(ctx, flats, nest.big_body));

        // route 2: mu_S then mu — merge all inner tag lists
        std::vector<Poly> pool;
        for (const auto& w : nest.inners)
          for (const auto& t : w.tags)
            if (std::find(pool.begin(), pool.end(), t) == pool.end())
              pool.push_back(t);
        ContextPtr pooled = outer_context(ctx, pool.size());
        std::vector<Poly> rebodied;
        for (const auto& w : nest.inners) {
          std::vector<Poly> images;
          for (const auto& t : w.tags) {
            std::size_t at =
                std::find(pool.begin(), pool.end(), t) - pool.begin();
            images.push_back(Poly::variable(pooled, at));
          }
          rebodied.push_back(w.tags.empty() ? rename_into(w.body, pooled)
                                            : w.body.substitute(images));
        }
        Poly merged_body = nest.big_body.substitute(rebodied);
        Poly via_outer =
            mu_flatten(OuterPoly::make(ctx, pool, merged_body));

        if (via_inner == via_outer) return std::nullopt;
        std::string label;
        for (const auto& w : nest.inners) label += w.to_string() + "; ";
        label += "body " + nest.big_body.to_string();
        return CheckFailure{label, via_inner.to_string(),
                            via_outer.to_string()};
      });

  return {std::move(unit_left), std::move(unit_right), std::move(assoc)};
}

std::vector<CheckReport> check_alt_characterization(const ContextPtr& ctx,
                                                    const CheckConfig& cfg) {
  Sampler s(cfg.seed);
  const std::size_t n = ctx->nvars();

  // Identity monad morphism: d commutes with it on the nose.  This is the
  // only morphism instance supported; the square is exercised through the
  // substitution machinery rather than assumed.
  std::vector<std::vector<Scalar>> id_rows(n,
                                           std::vector<Scalar>(n, Scalar::from_int(ctx->field(), 0)));
  for (std::size_t i = 0; i < n; ++i)
    id_rows[i][i] = Scalar::from_int(ctx->field(), 1);
  LinearMap identity = LinearMap::make(ctx, ctx, id_rows);
  std::vector<Poly> square_inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    square_inputs.push_back(s.poly(ctx, cfg.max_degree, cfg.max_terms));
  CheckReport square = run_sweep(
      "alt-square", cfg, square_inputs,
      [&](const Poly& p) -> std::optional<CheckFailure> {
        auto lhs = deriving_transform(identity.apply(p));
        auto grad = deriving_transform(p);
        std::vector<Poly> rhs;
        for (const auto& g : grad) rhs.push_back(identity.apply(g));
        if (lhs == rhs) return std::nullopt;
        return CheckFailure{p.to_string(), polyvec_to_string(lhs),
                            polyvec_to_string(rhs)};
      });

  // d is forced on all of SC by its action on generators plus the chain
  // rule: instantiate (d4) at tags = variables and compare slot by slot.
  // The right side differentiates in the *outer* ring and substitutes back,
  // so the two sides travel different code paths.
  std::vector<Poly> gen_inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    gen_inputs.push_back(s.poly(ctx, cfg.max_degree, cfg.max_terms));
  CheckReport generators = run_sweep(
      "alt-generators", cfg, gen_inputs,
      [&](const Poly& p) -> std::optional<CheckFailure> {
        auto lhs = deriving_transform(p);
        std::vector<Poly> rhs;
        if (n == 0) {
          rhs = polyvec_zero(ctx, 0);
        } else {
          std::vector<Poly> tags;
          for (std::size_t i = 0; i < n; ++i) tags.push_back(unit_eta(ctx, i));
          ContextPtr outer = outer_context(ctx, n);
          Poly body = rename_into(p, outer);
          for (std::size_t j = 0; j < n; ++j)
            rhs.push_back(body.partial_derivative(j).substitute(tags));
        }
        if (lhs == rhs) return std::nullopt;
        return CheckFailure{p.to_string(), polyvec_to_string(lhs),
                            polyvec_to_string(rhs)};
      });

  // Pure Leibniz recursion reconstructs the same gradient without ever
  // invoking the exponent rule.
  std::vector<Poly> leib_inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    leib_inputs.push_back(s.poly(ctx, cfg.max_degree, cfg.max_terms));
  CheckReport leibniz = run_sweep(
      "alt-leibniz", cfg, leib_inputs,
      [&](const Poly& p) -> std::optional<CheckFailure> {
        auto lhs = deriving_transform(p);
        auto rhs = leibniz_gradient(p);
        if (lhs == rhs) return std::nullopt;
        return CheckFailure{p.to_string(), polyvec_to_string(lhs),
                            polyvec_to_string(rhs)};
      });

  // Constants die, as the empty instance of the chain rule demands.
  std::vector<Scalar> const_inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    const_inputs.push_back(s.scalar(ctx->field()));
  CheckReport constants = run_sweep(
      "alt-constants", cfg, const_inputs,
      [&](const Scalar& c) -> std::optional<CheckFailure> {
        ContextPtr empty_outer = outer_context(ctx, 0);
        OuterPoly w = OuterPoly::make(
            ctx, {}, Poly::constant(empty_outer, c));
        auto grad = deriving_transform(mu_flatten(w));
        if (polyvec_is_zero(grad)) return std::nullopt;
        return CheckFailure{c.to_string(), polyvec_to_string(grad),
                            polyvec_to_string(polyvec_zero(ctx, n))};
      });

  // Linearity, which the gradient definition grants and the
  // characterization needs as a hypothesis.
  std::vector<std::tuple<Poly, Poly, Scalar>> lin_inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    lin_inputs.emplace_back(s.poly(ctx, cfg.max_degree, cfg.max_terms),
                            s.poly(ctx, cfg.max_degree, cfg.max_terms),
                            s.scalar(ctx->field()));
  CheckReport linear = run_sweep(
      "alt-linear", cfg, lin_inputs,
      [&](const std::tuple<Poly, Poly, Scalar>& in)
          -> std::optional<CheckFailure> {
        const auto& [p, q, c] = in;
        auto lhs = deriving_transform(p.scaled(c) + q);
        auto rhs = vec_add(gradient_times(Poly::constant(ctx, c),
                                          deriving_transform(p)),
                           deriving_transform(q));
        if (lhs == rhs) return std::nullopt;
        return CheckFailure{"p = " + p.to_string() + ", q = " + q.to_string() +
                                ", c = " + c.to_string(),
                            polyvec_to_string(lhs), polyvec_to_string(rhs)};
      });

  return {std::move(square), std::move(generators), std::move(leibniz),
          std::move(constants), std::move(linear)};
}

}  // namespace kahler
