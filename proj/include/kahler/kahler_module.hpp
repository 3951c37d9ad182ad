#pragma once

#include "kahler/derivation.hpp"

namespace kahler {

/// The module of Kahler differentials Omega_A of a finitely presented
/// algebra A = k[x_1..x_n]/I, presented as A^n (one generator dx_i per
/// variable) modulo the Jacobian rows (df/dx_1, ..., df/dx_n) of the
/// reduced basis of I, together with the universal derivation
/// d(x_i) = dx_i.  Using the reduced basis rather than the caller's
/// generators keeps the presentation an invariant of the algebra.
struct KahlerModule {
  AlgebraPtr algebra;
  ModulePtr module;
  Derivation universal;
};

KahlerModule kahler_of_algebra(const AlgebraPtr& a);

/// Universal property: for any derivation D: A -> M there is exactly one
/// module map h: Omega_A -> M with h o d = D, namely h(dx_i) = D(x_i).
/// The returned map's construction re-validates the relation rows, so a
/// valid derivation always factors.
ModuleMap factor_derivation(const KahlerModule& omega, const Derivation& d);

/// Functoriality: f: A -> B induces Omega_A -> (Omega_B)_A with
/// dx_i -> d_B(f(x_i)); implemented as the factorization of the pulled-back
/// universal derivation.
ModuleMap omega_on_morphism(const AlgebraMap& f, const KahlerModule& source,
                            const KahlerModule& target);

}  // namespace kahler
