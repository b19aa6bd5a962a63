#pragma once

#include <functional>

#include "waldcat/diagram.hpp"

namespace waldcat {

// A Waldhausen structure on a target category: cofibration and weak
// equivalence predicates, a distinguished (not merely up-to-iso) zero object,
// and a chosen finite skeleton used by exhaustive checks.
struct WaldCat {
  std::string name;
  TargetPtr base;
  std::function<bool(TMor)> is_cofibration;
  std::function<bool(TMor)> is_weq;
  TObj zero;
  std::vector<TObj> skel;

  TargetCategory& cat() const { return *base; }
};

// Builtin Waldhausen categories.
//   finset_pointed(maxsize): pointed sets of cardinality <= maxsize
//                            (cofibrations = injections, weqs = isos)
//   nstar(maxn):             the same category, skeleton 0..maxn
//   vect_fp(p, maxdim):      F_p vector spaces of dimension <= maxdim
WaldCat builtin_finset_pointed(int maxsize);
WaldCat builtin_nstar(int maxn);
WaldCat builtin_vect_fp(int p, int maxdim);
// Dispatch by name ("finset_pointed", "nstar", "vect_fp").
WaldCat builtin(const std::string& name, int size_param, int p = 2);

// Exhaustive W1-W5 check over the category's skeleton. `max_objects` guards
// the enumeration (hard error when exceeded). Reports at most 10
// counterexamples per axiom; also verifies that cofibrations and weak
// equivalences form subcategories.
Verdict check_wald_axioms(const WaldCat& W, int max_objects = 64);

// All morphisms between skeleton objects, in canonical order.
std::vector<TMor> skeleton_morphisms(const WaldCat& W);

// Pushout of  c <- a >-> b  along the cofibration f: a -> b. Verifies the
// cofibration hypothesis (W4 only promises these pushouts).
Pushout pushout_along_cofibration(const WaldCat& W, TMor f_cofib, TMor g);

// Test-style helpers for "up to iso" comparisons; backtracking over the
// (finite) hom sets. Used by tests and verdict code, never inside colimits.
bool objects_isomorphic(TargetCategory& T, TObj a, TObj b);
std::vector<TMor> isos_between(TargetCategory& T, TObj a, TObj b);
// Arrows m1, m2 are isomorphic when isos phi, psi close the square
// psi ∘ m1 = m2 ∘ phi.
bool arrows_isomorphic(TargetCategory& T, TMor m1, TMor m2);

}  // namespace waldcat
