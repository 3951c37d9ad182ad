#include "kahler/wext.hpp"

#include <optional>
#include <sstream>

#include "kahler/parallel.hpp"
#include "kahler/samples.hpp"

namespace kahler {

namespace {

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

/// A fresh evaluation context: formal variable slots for beta arguments.
ContextPtr formal_context(const WAlgebra& w, std::size_t k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    names.push_back("s" + std::to_string(i + 1));
  return make_context(names, w.base()->context()->order(),
                      w.base()->context()->field());
}

WElement sample_w_element(Sampler& s, const WAlgebra& w,
                          std::uint32_t max_degree, std::size_t max_terms) {
  const auto& actx = w.base()->context();
  AlgebraElement a = w.base()->nu(s.poly(actx, max_degree, max_terms));
  const auto& mctx = w.fiber()->carrier_context();
  PolyVec rep;
  for (std::size_t i = 0; i < w.fiber()->carrier_rank(); ++i)
    rep.push_back(s.poly(mctx, max_degree, max_terms));
  return w.element(std::move(a), w.fiber()->element(std::move(rep)));
}

std::string args_to_string(const std::vector<WElement>& args) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out << "; ";
    out << args[i].to_string();
  }
  out << "]";
  return out.str();
}

}  // namespace

// ===== the square-zero extension ============================================

std::string WElement::to_string() const {
  return base.to_string() + " | " + tangent.to_string();
}

WAlgebra::WAlgebra(AlgebraPtr base, ModulePtr fiber)
    : base_(std::move(base)), fiber_(std::move(fiber)) {
  if (!base_ || !fiber_) throw ContextError("W(A, M) needs both components");
  if (!fiber_->algebra()->same_as(*base_))
    throw ContextError("W(A, M): module lives over a different algebra");
}

WElement WAlgebra::element(AlgebraElement a, ModuleElement m) const {
  require_same_algebra(a.owner(), base_, "W element");
  require_same_module(m.owner(), fiber_, "W element");
  return WElement{std::move(a), std::move(m)};
}

WElement WAlgebra::zero() const {
  return WElement{base_->zero_element(), fiber_->zero_element()};
}

WElement WAlgebra::one() const {
  return WElement{base_->one(), fiber_->zero_element()};
}

WElement WAlgebra::from_scalar(const Scalar& c) const {
  return WElement{base_->from_scalar(c), fiber_->zero_element()};
}

WElement WAlgebra::lift(const AlgebraElement& a) const {
  require_same_algebra(a.owner(), base_, "W lift");
  return WElement{a, fiber_->zero_element()};
}

bool WAlgebra::same_as(const WAlgebra& o) const {
  return base_->same_as(*o.base_) && fiber_->same_as(*o.fiber_);
}

std::string WAlgebra::to_string() const {
  return "W(" + base_->name() + ", " + fiber_->name() + ")";
}

WElement w_add(const WElement& u, const WElement& v) {
  return WElement{u.base + v.base, u.tangent + v.tangent};
}

WElement w_neg(const WElement& u) {
  return WElement{-u.base, -u.tangent};
}

WElement w_sub(const WElement& u, const WElement& v) {
  return w_add(u, w_neg(v));
}

WElement w_scaled(const WElement& u, const Scalar& c) {
  return WElement{u.base.scaled(c), u.tangent.scaled(c)};
}

WElement squarezero_product(const WElement& u, const WElement& v) {
  return WElement{u.base * v.base,
                  action(u.base, v.tangent) + action(v.base, u.tangent)};
}

// ===== the T-algebra structure ==============================================

WElement beta_eval(const WAlgebra& w, const Poly& p,
                   const std::vector<WElement>& args) {
  if (!(p.context()->field() == w.base()->context()->field()))
    throw ContextError("beta: polynomial over the wrong field");
  if (p.context()->nvars() != args.size())
    throw ArityError("beta: " + std::to_string(args.size()) +
                     " arguments for " +
                     std::to_string(p.context()->nvars()) + " variables");
  std::vector<AlgebraElement> bases;
  bases.reserve(args.size());
  for (const auto& u : args) {
    require_same_algebra(u.base.owner(), w.base(), "beta argument");
    require_same_module(u.tangent.owner(), w.fiber(), "beta argument");
    bases.push_back(u.base);
  }
  AlgebraRing ring{w.base()};
  AlgebraElement value = eval_poly(p, bases, ring);
  ModuleElement tangent = w.fiber()->zero_element();
  for (std::size_t i = 0; i < args.size(); ++i) {
    AlgebraElement slope = eval_poly(p.partial_derivative(i), bases, ring);
    if (slope.is_zero()) continue;
    tangent = tangent + action(slope, args[i].tangent);
  }
  return WElement{std::move(value), std::move(tangent)};
}

std::vector<CheckReport> check_w_is_T_algebra(const WAlgebra& w,
                                              const CheckConfig& cfg) {
  Sampler s(cfg.seed);

  // unit law: beta . eta = id
  struct UnitIn {
    std::vector<WElement> args;
    std::size_t pick;
  };
  std::vector<UnitIn> unit_inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t k = s.int_in(1, 3);
    std::vector<WElement> args;
    for (std::size_t j = 0; j < k; ++j)
      args.push_back(sample_w_element(s, w, cfg.max_degree, cfg.max_terms));
    unit_inputs.push_back({std::move(args), s.index(k)});
  }
  CheckReport unit = run_sweep(
      "beta-unit", cfg, unit_inputs,
      [&](const UnitIn& in) -> std::optional<CheckFailure> {
        ContextPtr formal = formal_context(w, in.args.size());
        WElement got =
            beta_eval(w, Poly::variable(formal, in.pick), in.args);
        if (got == in.args[in.pick]) return std::nullopt;
        return CheckFailure{formal->var(in.pick) + " at " +
                                args_to_string(in.args),
                            got.to_string(), in.args[in.pick].to_string()};
      });

  // multiplication law: beta . mu = beta . S(beta) on nested polynomials
  struct MuIn {
    OuterPoly w_poly;
    std::vector<WElement> args;
  };
  std::vector<MuIn> mu_inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t k = s.int_in(1, 3);
    ContextPtr formal = formal_context(w, k);
    OuterPoly nested = sample_outer(s, formal, 3, 3, 3);
    std::vector<WElement> args;
    for (std::size_t j = 0; j < k; ++j)
      args.push_back(sample_w_element(s, w, cfg.max_degree, cfg.max_terms));
    mu_inputs.push_back({std::move(nested), std::move(args)});
  }
  CheckReport mu = run_sweep(
      "beta-mu", cfg, mu_inputs,
      [&](const MuIn& in) -> std::optional<CheckFailure> {
        WElement lhs = beta_eval(w, mu_flatten(in.w_poly), in.args);
        std::vector<WElement> inner_vals;
        for (const auto& tag : in.w_poly.tags)
          inner_vals.push_back(beta_eval(w, tag, in.args));
        WElement rhs = beta_eval(w, in.w_poly.body, inner_vals);
        if (lhs == rhs) return std::nullopt;
        return CheckFailure{in.w_poly.to_string() + " at " +
                                args_to_string(in.args),
                            lhs.to_string(), rhs.to_string()};
      });

  // beta agrees with iterating the ring operations of W
  struct IterIn {
    Poly p;
    std::vector<WElement> args;
  };
  std::vector<IterIn> iter_inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t k = s.int_in(1, 3);
    ContextPtr formal = formal_context(w, k);
    std::vector<WElement> args;
    for (std::size_t j = 0; j < k; ++j)
      args.push_back(sample_w_element(s, w, cfg.max_degree, cfg.max_terms));
    iter_inputs.push_back(
        {s.poly(formal, cfg.max_degree, cfg.max_terms), std::move(args)});
  }
  CheckReport iter = run_sweep(
      "beta-iterated", cfg, iter_inputs,
      [&](const IterIn& in) -> std::optional<CheckFailure> {
        WRing ring{&w};
        WElement via_ring = eval_poly(in.p, in.args, ring);
        WElement via_beta = beta_eval(w, in.p, in.args);
        if (via_ring == via_beta) return std::nullopt;
        return CheckFailure{in.p.to_string() + " at " +
                                args_to_string(in.args),
                            via_beta.to_string(), via_ring.to_string()};
      });

  return {std::move(unit), std::move(mu), std::move(iter)};
}

CheckReport check_product_coincides(const WAlgebra& w,
                                    const CheckConfig& cfg) {
  Sampler s(cfg.seed);
  std::vector<std::pair<WElement, WElement>> inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    inputs.emplace_back(sample_w_element(s, w, cfg.max_degree, cfg.max_terms),
                        sample_w_element(s, w, cfg.max_degree, cfg.max_terms));
  return run_sweep(
      "product-coincides", cfg, inputs,
      [&](const std::pair<WElement, WElement>& in)
          -> std::optional<CheckFailure> {
        const auto& [u, v] = in;
        ContextPtr formal = formal_context(w, 2);
        Poly xy = Poly::variable(formal, 0) * Poly::variable(formal, 1);
        WElement via_beta = beta_eval(w, xy, {u, v});
        WElement direct = squarezero_product(u, v);
        if (via_beta == direct) return std::nullopt;
        return CheckFailure{u.to_string() + " * " + v.to_string(),
                            direct.to_string(), via_beta.to_string()};
      });
}

CheckReport check_pi1_commutes(const WAlgebra& w, const CheckConfig& cfg) {
  Sampler s(cfg.seed);
  struct In {
    Poly p;
    std::vector<WElement> args;
  };
  std::vector<In> inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t k = s.int_in(1, 3);
    ContextPtr formal = formal_context(w, k);
    std::vector<WElement> args;
    for (std::size_t j = 0; j < k; ++j)
      args.push_back(sample_w_element(s, w, cfg.max_degree, cfg.max_terms));
    inputs.push_back(
        {s.poly(formal, cfg.max_degree, cfg.max_terms), std::move(args)});
  }
  return run_sweep(
      "pi1-commutes", cfg, inputs, [&](const In& in) -> std::optional<CheckFailure> {
        std::vector<AlgebraElement> bases;
        for (const auto& u : in.args) bases.push_back(u.base);
        AlgebraRing ring{w.base()};
        AlgebraElement plain = eval_poly(in.p, bases, ring);
        AlgebraElement through_w = beta_eval(w, in.p, in.args).base;
        if (plain == through_w) return std::nullopt;
        return CheckFailure{in.p.to_string() + " at " +
                                args_to_string(in.args),
                            through_w.to_string(), plain.to_string()};
      });
}

// ===== T-algebra maps into W ================================================

WAlgebraMap WAlgebraMap::make(AlgebraPtr source, WAlgebra target,
                              std::vector<WElement> images) {
  if (!source) throw ContextError("W-algebra map needs a source");
  if (images.size() != source->nvars())
    throw ArityError("W-algebra map: " + std::to_string(images.size()) +
                     " images for " + std::to_string(source->nvars()) +
                     " generators");
  std::vector<AlgebraElement> bases;
  std::vector<ModuleElement> tangents;
  for (const auto& im : images) {
    require_same_algebra(im.base.owner(), target.base(), "W-algebra map");
    require_same_module(im.tangent.owner(), target.fiber(), "W-algebra map");
    bases.push_back(im.base);
    tangents.push_back(im.tangent);
  }
  // first components must form an algebra map...
  AlgebraMap base_map = AlgebraMap::make(source, target.base(), bases);
  // ...and second components a derivation valued in the fiber pulled back
  // along it (the fiber itself when the map is an identity).
  ModulePtr dtarget;
  std::vector<ModuleElement> dimages;
  if (base_map.is_identity()) {
    dtarget = target.fiber();
    dimages = std::move(tangents);
  } else {
    dtarget = restrict_scalars(base_map, target.fiber());
    for (const auto& t : tangents) dimages.push_back(dtarget->element(t.rep()));
  }
  Derivation derivation =
      Derivation::make(source, std::move(dtarget), std::move(dimages));
  return WAlgebraMap(std::move(source), std::move(target), std::move(images),
                     std::move(base_map), std::move(derivation));
}

WElement WAlgebraMap::apply(const AlgebraElement& a) const {
  require_same_algebra(a.owner(), source_, "W-algebra map application");
  AlgebraElement base = base_map_.apply(a);
  ModuleElement tangent = derivation_.apply(a);
  return WElement{std::move(base), target_.fiber()->element(tangent.rep())};
}

bool WAlgebraMap::operator==(const WAlgebraMap& o) const {
  if (!source_->same_as(*o.source_) || !target_.same_as(o.target_))
    return false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].base.rep() != o.images_[i].base.rep()) return false;
    if (images_[i].tangent.rep() != o.images_[i].tangent.rep()) return false;
  }
  return true;
}

WAlgebraMap derivation_to_algebra_map(const Derivation& d) {
  const AlgebraPtr& a = d.source();
  WAlgebra w(a, d.target());
  std::vector<WElement> images;
  images.reserve(a->nvars());
  for (std::size_t i = 0; i < a->nvars(); ++i)
    images.push_back(WElement{a->generator(i), d.images()[i]});
  return WAlgebraMap::make(a, std::move(w), std::move(images));
}

Derivation algebra_map_to_derivation(const WAlgebraMap& phi) {
  if (!phi.base_map().is_identity())
    throw FirstComponentError(
        "first components are not the identity on the base algebra");
  return phi.derivation();
}

std::pair<AlgebraMap, Derivation> hom_der_forward(const WAlgebraMap& phi) {
  return {phi.base_map(), phi.derivation()};
}

WAlgebraMap hom_der_backward(const AlgebraMap& g, const Derivation& d) {
  if (!d.source()->same_as(*g.source()))
    throw ContextError("hom_der_backward: derivation lives on a different "
                       "algebra than the map's source");
  // Recover the unrestricted fiber the derivation is valued in.
  ModulePtr n;
  if (!d.target()->is_direct() && d.target()->via() == g) {
    n = d.target()->inner();
  } else if (g.is_identity() &&
             d.target()->algebra()->same_as(*g.target())) {
    n = d.target();
  } else {
    throw ContextError(
        "hom_der_backward: derivation is not valued in a module restricted "
        "along the given map");
  }
  WAlgebra w(g.target(), n);
  std::vector<WElement> images;
  images.reserve(g.source()->nvars());
  for (std::size_t i = 0; i < g.source()->nvars(); ++i)
    images.push_back(WElement{g.images()[i],
                              n->element(d.images()[i].rep())});
  return WAlgebraMap::make(g.source(), std::move(w), std::move(images));
}

// ===== the fibration Mod_T ==================================================

ModTObject make_modt_object(AlgebraPtr algebra, ModulePtr module) {
  if (!algebra || !module) throw ContextError("Mod_T object needs both parts");
  if (!module->algebra()->same_as(*algebra))
    throw ContextError("Mod_T object: module lives over a different algebra");
  return ModTObject{std::move(algebra), std::move(module)};
}

ModTArrow make_modt_arrow(ModTObject source, ModTObject target,
                          AlgebraMap base, ModuleMap fiber) {
  if (!base.source()->same_as(*source.algebra) ||
      !base.target()->same_as(*target.algebra))
    throw ContextError("Mod_T arrow: base map endpoints do not match");
  if (!fiber.source()->same_as(*source.module))
    throw ContextError("Mod_T arrow: fiber map source does not match");
  const bool direct_ok =
      base.is_identity() && fiber.target()->same_as(*target.module);
  const bool restricted_ok =
      fiber.target()->same_as(*restrict_scalars(base, target.module));
  if (!direct_ok && !restricted_ok)
    throw ContextError(
        "Mod_T arrow: fiber map must land in the target module restricted "
        "along the base map");
  return ModTArrow{std::move(source), std::move(target), std::move(base),
                   std::move(fiber)};
}

ModTArrow modt_identity(const ModTObject& obj) {
  return ModTArrow{obj, obj, AlgebraMap::identity(obj.algebra),
                   ModuleMap::identity(obj.module)};
}

ModTArrow compose(const ModTArrow& s, const ModTArrow& t) {
  if (!s.target.algebra->same_as(*t.source.algebra) ||
      !s.target.module->same_as(*t.source.module))
    throw ContextError("Mod_T composition: endpoints do not meet");
  AlgebraMap base = compose(s.base, t.base);
  // Push each generator image through t's fiber, reading everything at the
  // carrier level; then wrap for the composite base map.
  ModulePtr wrapped = base.is_identity()
                          ? t.target.module
                          : restrict_scalars(base, t.target.module);
  std::vector<ModuleElement> images;
  const std::size_t r = s.source.module->rank();
  images.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    ModuleElement mid = t.source.module->element(s.fiber.images()[i].rep());
    ModuleElement out = t.fiber.apply(mid);
    images.push_back(wrapped->element(out.rep()));
  }
  ModuleMap fiber = ModuleMap::make(s.source.module, wrapped, images);
  return ModTArrow{s.source, t.target, std::move(base), std::move(fiber)};
}

// ===== the W functor ========================================================

WElement WMap::apply(const WElement& u) const {
  require_same_algebra(u.base.owner(), source.base(), "W map application");
  require_same_module(u.tangent.owner(), source.fiber(), "W map application");
  return target.element(base.apply(u.base), fiber(u.tangent));
}

WMap w_on_module_map(const WAlgebra& source, const ModuleMap& h) {
  if (!h.source()->same_as(*source.fiber()))
    throw ContextError("W(1+h): map does not start at the fiber");
  if (!h.target()->algebra()->same_as(*source.base()))
    throw ContextError("W(1+h): map leaves the base algebra");
  WAlgebra target(source.base(), h.target());
  return WMap{source, std::move(target), AlgebraMap::identity(source.base()),
              [h](const ModuleElement& m) { return h.apply(m); },
              "W(1+h)"};
}

WMap w_on_algebra_map(const AlgebraMap& g, const ModulePtr& n) {
  if (!n->algebra()->same_as(*g.target()))
    throw ContextError("W(g+1): module lives over a different algebra");
  WAlgebra source(g.source(), restrict_scalars(g, n));
  WAlgebra target(g.target(), n);
  return WMap{std::move(source), std::move(target), g,
              [n](const ModuleElement& m) { return n->element(m.rep()); },
              "W(g+1)"};
}

WMap w_functor_arrow(const ModTArrow& arrow) {
  WAlgebra source(arrow.source.algebra, arrow.source.module);
  WAlgebra target(arrow.target.algebra, arrow.target.module);
  ModulePtr n = arrow.target.module;
  ModuleMap h = arrow.fiber;
  return WMap{std::move(source), std::move(target), arrow.base,
              [n, h](const ModuleElement& m) {
                return n->element(h.apply(m).rep());
              },
              "W(" + arrow.source.module->name() + "->" +
                  arrow.target.module->name() + ")"};
}

WMap compose(const WMap& s, const WMap& t) {
  if (!t.source.same_as(s.target))
    throw ContextError("W map composition: endpoints do not meet");
  auto first = s.fiber;
  auto second = t.fiber;
  return WMap{s.source, t.target, compose(s.base, t.base),
              [first, second](const ModuleElement& m) {
                return second(first(m));
              },
              s.label + ";" + t.label};
}

CheckReport check_beta_commutes(const WMap& map, const CheckConfig& cfg) {
  Sampler s(cfg.seed);
  struct In {
    Poly p;
    std::vector<WElement> args;
  };
  std::vector<In> inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const std::size_t k = s.int_in(1, 3);
    ContextPtr formal = formal_context(map.source, k);
    std::vector<WElement> args;
    for (std::size_t j = 0; j < k; ++j)
      args.push_back(
          sample_w_element(s, map.source, cfg.max_degree, cfg.max_terms));
    inputs.push_back(
        {s.poly(formal, cfg.max_degree, cfg.max_terms), std::move(args)});
  }
  return run_sweep(
      "beta-commutes(" + map.label + ")", cfg, inputs,
      [&](const In& in) -> std::optional<CheckFailure> {
        WElement lhs = map.apply(beta_eval(map.source, in.p, in.args));
        std::vector<WElement> mapped;
        for (const auto& u : in.args) mapped.push_back(map.apply(u));
        WElement rhs = beta_eval(map.target, in.p, mapped);
        if (lhs == rhs) return std::nullopt;
        return CheckFailure{in.p.to_string() + " at " +
                                args_to_string(in.args),
                            lhs.to_string(), rhs.to_string()};
      });
}

// ===== cartesian lifts ======================================================

WAlgebraMap check_cartesian(const AlgebraMap& g, const WAlgebraMap& q,
                            const AlgebraMap& f) {
  if (!f.source()->same_as(*q.source()))
    throw ContextError("cartesian: f does not start at q's source");
  if (!f.target()->same_as(*g.source()))
    throw ContextError("cartesian: f does not land in g's source");
  if (!g.target()->same_as(*q.target().base()))
    throw ContextError("cartesian: g does not land in q's base algebra");
  if (!(compose(f, g) == q.base_map()))
    throw CommutingConditionError(
        "cartesian: f;g differs from the first components of q");

  const ModulePtr& n = q.target().fiber();
  ModulePtr pulled = restrict_scalars(g, n);
  WAlgebra wa(g.source(), pulled);
  std::vector<WElement> images;
  images.reserve(q.images().size());
  for (std::size_t i = 0; i < q.images().size(); ++i)
    images.push_back(WElement{f.images()[i],
                              pulled->element(q.images()[i].tangent.rep())});
  return WAlgebraMap::make(q.source(), std::move(wa), std::move(images));
}

}  // namespace kahler
