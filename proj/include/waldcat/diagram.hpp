#pragma once

#include "waldcat/fincat.hpp"
#include "waldcat/target.hpp"

namespace waldcat {

// A functor from a finite index category into a target category.
struct Diagram {
  FinCatPtr index;
  TargetPtr target;
  std::vector<TObj> ob;   // per index object
  std::vector<TMor> mor;  // per index morphism

  TObj at(int o) const { return ob[o]; }
  TMor edge(int m) const { return mor[m]; }
};

// Functoriality check (identities, composition), exhaustive on the index.
Verdict check_diagram(const Diagram& D);

// Precompose with a functor between index categories: D ∘ F.
Diagram precompose(const Diagram& D, const FinFunctor& F);

// Restriction to a subcategory; `obj_of` maps sub-object positions back to
// parent object ids.
struct Restriction {
  Diagram diagram;
  std::vector<int> obj_of;
};
Restriction restrict(const Diagram& D, const Subcategory& S);

// A natural transformation between parallel diagrams.
struct DNat {
  Diagram src, dst;
  std::vector<TMor> comp;  // per index object
};
Verdict check_natural(const DNat& a);

// Colimit computed by the coequalizer formula
//   coeq( ∐_{f} dom f  ⇉  ∐_{A} A )
// where one map includes dom f into its component and the other applies f
// first. Identity morphisms are skipped on the left: they contribute only
// reflexive relations and the canonical representative is unchanged.
struct Colimit {
  TObj apex;
  std::vector<TMor> legs;  // per index object
  Coproduct vertex_coprod;
  Coequalizer coeq;
};

Colimit colimit(const Diagram& D);

// Unique factorization of a cocone through the colimit: given legs h_A with
// h_B ∘ D(f) = h_A for all f: A -> B, returns u with u ∘ leg_A = h_A.
TMor factor_cocone(const Colimit& c, const Diagram& D, std::span<const TMor> legs);

// Pushout of the span  b <-f- a -g-> c, computed as the colimit of the
// 3-object span shape.
struct Pushout {
  TObj obj;
  TMor from_b, from_c, from_a;
  Colimit colim;  // for factorization
  Diagram span;
};
Pushout pushout(TargetPtr target, TMor f, TMor g);
TMor pushout_factor(const Pushout& po, TMor leg_b, TMor leg_c);

}  // namespace waldcat
