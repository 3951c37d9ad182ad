#include "kahler/kahler_module.hpp"

namespace kahler {

KahlerModule kahler_of_algebra(const AlgebraPtr& a) {
  if (!a) throw ContextError("kahler_of_algebra: null algebra");
  const std::size_t n = a->nvars();
  if (a->is_zero_algebra()) {
    // only the zero module exists over the zero algebra; present it as
    // rank 0 rather than n generators that all collapse
    ModulePtr omega =
        ModulePresentation::make(a, 0, {}, "Omega_" + a->name());
    std::vector<ModuleElement> images(n, omega->zero_element());
    Derivation d = Derivation::make(a, omega, std::move(images));
    return KahlerModule{a, std::move(omega), std::move(d)};
  }
  std::vector<PolyVec> rows;
  for (const auto& f : a->relations().basis()) {
    PolyVec row;
    row.reserve(n);
    for (std::size_t i = 0; i < n; ++i) row.push_back(f.partial_derivative(i));
    rows.push_back(std::move(row));
  }
  ModulePtr omega = ModulePresentation::make(a, n, std::move(rows),
                                             "Omega_" + a->name());
  Derivation d = Derivation::make(a, omega, omega->generators());
  return KahlerModule{a, std::move(omega), std::move(d)};
}

ModuleMap factor_derivation(const KahlerModule& omega, const Derivation& d) {
  if (!d.source()->same_as(*omega.algebra))
    throw ContextError(
        "factor_derivation: derivation lives on a different algebra");
  if (omega.algebra->is_zero_algebra())
    return ModuleMap::zero_map(omega.module, d.target());
  // h(dx_i) = D(x_i); the Jacobian row of a relation f maps to the
  // chain-rule value of D at f, which D's own validity makes zero.
  return ModuleMap::make(omega.module, d.target(), d.images());
}

ModuleMap omega_on_morphism(const AlgebraMap& f, const KahlerModule& source,
                            const KahlerModule& target) {
  if (!f.source()->same_as(*source.algebra) ||
      !f.target()->same_as(*target.algebra))
    throw ContextError("omega_on_morphism: endpoints do not match the map");
  return factor_derivation(source, precompose(f, target.universal));
}

}  // namespace kahler
