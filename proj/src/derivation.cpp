#include "kahler/derivation.hpp"

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

void check_images_shape(const AlgebraPtr& source, const ModulePtr& target,
                        const std::vector<ModuleElement>& images,
                        const char* where) {
  if (!source || !target) throw ContextError("derivation needs endpoints");
  if (!target->algebra()->same_as(*source))
    throw ContextError(std::string(where) +
                       ": module lives over a different algebra");
  if (images.size() != source->nvars())
    throw ArityError(std::string(where) + ": " + std::to_string(images.size()) +
                     " images for " + std::to_string(source->nvars()) +
                     " generators");
  for (const auto& im : images)
    require_same_module(im.owner(), target, where);
}

}  // namespace

// ===== chain-rule extension =================================================

ModuleElement chain_rule_apply(const AlgebraPtr& a, const ModulePtr& m,
                               const std::vector<ModuleElement>& images,
                               const Poly& p) {
  check_images_shape(a, m, images, "chain rule");
  require_same_context(p.context(), a->context(), "chain rule");
  ModuleElement acc = m->zero_element();
  for (std::size_t i = 0; i < images.size(); ++i) {
    AlgebraElement coeff = a->nu(p.partial_derivative(i));
    if (coeff.is_zero()) continue;
    acc = acc + action(coeff, images[i]);
  }
  return acc;
}

// ===== derivations ==========================================================

Derivation Derivation::make(AlgebraPtr source, ModulePtr target,
                            std::vector<ModuleElement> images) {
  check_images_shape(source, target, images, "derivation");
  for (const auto& f : source->relations().basis()) {
    ModuleElement val = chain_rule_apply(source, target, images, f);
    if (!val.is_zero())
      throw RelationViolation("derivation violates a defining relation",
                              f.to_string(), val.to_string());
  }
  return Derivation(std::move(source), std::move(target), std::move(images));
}

Derivation Derivation::zero(AlgebraPtr source, ModulePtr target) {
  std::vector<ModuleElement> images(source->nvars(), target->zero_element());
  return make(std::move(source), std::move(target), std::move(images));
}

ModuleElement Derivation::apply(const AlgebraElement& a) const {
  require_same_algebra(a.owner(), source_, "derivation application");
  return chain_rule_apply(source_, target_, images_, a.rep());
}

ModuleElement Derivation::apply_poly(const Poly& p) const {
  return apply(source_->nu(p));
}

bool Derivation::operator==(const Derivation& o) const {
  if (!source_->same_as(*o.source_) || !target_->same_as(*o.target_))
    return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i].rep() != o.images_[i].rep()) return false;
  return true;
}

std::string Derivation::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << "; ";
    out << "D(" << source_->context()->var(i)
        << ") = " << images_[i].to_string();
  }
  if (images_.empty()) out << "D = 0";
  return out.str();
}

CheckReport check_derivation_relations(
    const AlgebraPtr& source, const ModulePtr& target,
    const std::vector<ModuleElement>& images) {
  check_images_shape(source, target, images, "derivation");
  CheckReport report;
  report.axiom = "derivation-relations";
  report.samples = source->relations().basis().size();
  for (const auto& f : source->relations().basis()) {
    ModuleElement val = chain_rule_apply(source, target, images, f);
    if (!val.is_zero())
      report.failures.push_back(
          {f.to_string(), val.to_string(), target->zero_element().to_string()});
  }
  return report;
}

// ===== candidates and law checkers ==========================================

DerivationCandidate DerivationCandidate::of(const Derivation& d,
                                            std::string label) {
  return {d.source(), d.target(),
          [d](const AlgebraElement& a) { return d.apply(a); },
          std::move(label)};
}

DerivationCandidate DerivationCandidate::from_function(
    AlgebraPtr source, ModulePtr target,
    std::function<ModuleElement(const AlgebraElement&)> map,
    std::string label) {
  return {std::move(source), std::move(target), std::move(map),
          std::move(label)};
}

CheckReport check_derivation_linear(const DerivationCandidate& cand,
                                    const CheckConfig& cfg) {
  Sampler s(cfg.seed);
  const auto& a = cand.source;
  struct In {
    AlgebraElement x, y;
    Scalar c;
  };
  std::vector<In> inputs;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    inputs.push_back({a->nu(s.poly(a->context(), cfg.max_degree, cfg.max_terms)),
                      a->nu(s.poly(a->context(), cfg.max_degree, cfg.max_terms)),
                      s.scalar(a->context()->field())});
  return run_sweep(
      "derivation-linear", cfg, inputs,
      [&](const In& in) -> std::optional<CheckFailure> {
        ModuleElement add_lhs = cand.map(in.x + in.y);
        ModuleElement add_rhs = cand.map(in.x) + cand.map(in.y);
        if (!(add_lhs == add_rhs))
          return CheckFailure{"a = " + in.x.to_string() +
                                  ", b = " + in.y.to_string(),
                              add_lhs.to_string(), add_rhs.to_string()};
        ModuleElement on_scalar = cand.map(a->from_scalar(in.c));
        if (!on_scalar.is_zero())
          return CheckFailure{"scalar " + in.c.to_string(),
                              on_scalar.to_string(),
                              cand.target->zero_element().to_string()};
        return std::nullopt;
      });
}

CheckReport check_leibniz(const DerivationCandidate& cand,
                          const CheckConfig& cfg) {
  Sampler s(cfg.seed);
  const auto& a = cand.source;
  const std::size_t n = a->nvars();

  std::vector<std::pair<AlgebraElement, AlgebraElement>> inputs;
  // generator pairs
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      inputs.emplace_back(a->generator(i), a->generator(j));
  // generator x low-degree monomial
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Monomial m(n);
        m[j] += 1;
        m[k] += 1;
        inputs.emplace_back(
            a->generator(i),
            a->nu(Poly::from_terms(
                a->context(),
                {{m, Scalar::from_int(a->context()->field(), 1)}})));
      }
  // random pairs
  for (std::size_t i = 0; i < cfg.samples; ++i)
    inputs.emplace_back(
        a->nu(s.poly(a->context(), cfg.max_degree, cfg.max_terms)),
        a->nu(s.poly(a->context(), cfg.max_degree, cfg.max_terms)));

  return run_sweep(
      "leibniz", cfg, inputs,
      [&](const std::pair<AlgebraElement, AlgebraElement>& in)
          -> std::optional<CheckFailure> {
        const auto& [x, y] = in;
        ModuleElement lhs = cand.map(x * y);
        ModuleElement rhs = action(x, cand.map(y)) + action(y, cand.map(x));
        if (lhs == rhs) return std::nullopt;
        return CheckFailure{"a = " + x.to_string() + ", b = " + y.to_string(),
                            lhs.to_string(), rhs.to_string()};
      });
}

CheckReport check_beck_T_derivation(const DerivationCandidate& cand,
                                    const CheckConfig& cfg) {
  Sampler s(cfg.seed);
  const auto& a = cand.source;
  const std::size_t n = a->nvars();

  // The generator images the chain-rule side will extend.
  std::vector<ModuleElement> var_images;
  var_images.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    var_images.push_back(cand.map(a->generator(i)));

  std::vector<Poly> inputs;
  // the defining relations themselves, and relation * random
  for (const auto& f : a->relations().basis()) {
    inputs.push_back(f);
    inputs.push_back(f * s.nonzero_poly(a->context(), 2, 2));
  }
  // quadratic generator products
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      inputs.push_back(Poly::variable(a->context(), i) *
                       Poly::variable(a->context(), j));
  // random polynomials
  for (std::size_t i = 0; i < cfg.samples; ++i)
    inputs.push_back(s.poly(a->context(), cfg.max_degree, cfg.max_terms));

  return run_sweep(
      "beck-T-derivation", cfg, inputs,
      [&](const Poly& p) -> std::optional<CheckFailure> {
        ModuleElement lhs = cand.map(a->nu(p));
        ModuleElement rhs =
            chain_rule_apply(a, cand.target, var_images, p);
        if (lhs == rhs) return std::nullopt;
        return CheckFailure{p.to_string(), lhs.to_string(), rhs.to_string()};
      });
}

std::vector<CheckReport> check_s_der_equals_der(
    const std::vector<DerivationCandidate>& candidates,
    const CheckConfig& cfg) {
  std::vector<CheckReport> out;
  out.reserve(candidates.size());
  for (const auto& cand : candidates) {
    CheckReport linear = check_derivation_linear(cand, cfg);
    CheckReport leibniz = check_leibniz(cand, cfg);
    CheckReport beck = check_beck_T_derivation(cand, cfg);
    const bool s_der = linear.ok() && leibniz.ok();
    const bool t_der = beck.ok();

    CheckReport agree;
    agree.axiom = "s-der-equals-t-der(" + cand.label + ")";
    agree.seed = cfg.seed;
    agree.samples = linear.samples + leibniz.samples + beck.samples;
    if (s_der != t_der) {
      agree.failures.push_back(
          {cand.label, std::string("S-derivation: ") + (s_der ? "yes" : "no"),
           std::string("Beck T-derivation: ") + (t_der ? "yes" : "no")});
    }
    out.push_back(std::move(agree));
  }
  return out;
}

// ===== base change ==========================================================

Derivation precompose(const AlgebraMap& g, const Derivation& d) {
  if (!g.target()->same_as(*d.source()))
    throw ContextError("precompose: map lands in a different algebra than "
                       "the derivation's source");
  ModulePtr pulled = restrict_scalars(g, d.target());
  std::vector<ModuleElement> images;
  images.reserve(g.source()->nvars());
  for (std::size_t i = 0; i < g.source()->nvars(); ++i) {
    ModuleElement down = d.apply(g.apply(g.source()->generator(i)));
    images.push_back(pulled->element(down.rep()));
  }
  return Derivation::make(g.source(), std::move(pulled), std::move(images));
}

}  // namespace kahler
