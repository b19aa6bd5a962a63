#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "waldcat/core.hpp"

namespace waldcat {

// A finite coproduct together with its injections.
struct Coproduct {
  TObj obj;
  std::vector<TMor> injections;
};

// The coequalizer of a parallel pair, with the projection to the quotient.
struct Coequalizer {
  TObj obj;
  TMor proj;
  TMor left, right;  // the coequalized pair (kept for factorization asserts)
};

// Oracle interface for a target category: object/morphism values with
// decidable equality (interned ids), composition, iso tests, a zero object,
// bounded skeleton/hom enumeration, and constructive finite colimits via
// coproducts and coequalizers returning canonical representatives.
//
// compose(g, f) is "g after f". All operations are deterministic; results are
// memoized internally, so instances are meant for single-threaded use (run
// concurrent work on separate instances).
class TargetCategory {
 public:
  virtual ~TargetCategory() = default;

  virtual std::string name() const = 0;
  virtual std::string object_label(TObj a) const = 0;
  virtual std::string morphism_label(TMor m) const = 0;

  virtual TObj dom(TMor m) const = 0;
  virtual TObj cod(TMor m) const = 0;
  virtual TMor identity(TObj a) = 0;
  virtual TMor compose(TMor g, TMor f) = 0;
  virtual bool is_identity(TMor m) = 0;
  virtual bool is_iso(TMor m) = 0;

  // Zero object (initial and terminal); every category here is pointed.
  virtual TObj zero_object() = 0;
  virtual TMor from_zero(TObj a) = 0;  // unique 0 -> a
  virtual TMor to_zero(TObj a) = 0;    // unique a -> 0
  TMor zero_mor(TObj a, TObj b) { return compose(from_zero(b), to_zero(a)); }

  // First `bound` objects of the canonical skeleton chain.
  virtual std::vector<TObj> skeleton(int bound) = 0;
  // All morphisms a -> b (finite; throws CapExceeded past the config cap).
  virtual std::vector<TMor> hom(TObj a, TObj b) = 0;

  virtual Coproduct coproduct(std::span<const TObj> parts) = 0;
  // Universal map out of a coproduct, given one leg per component.
  virtual TMor copair(const Coproduct& cp, std::span<const TMor> legs) = 0;
  virtual Coequalizer coequalizer(TMor f, TMor g) = 0;
  // Unique u with u∘proj = h, for h coequalizing the pair; throws otherwise.
  virtual TMor coeq_factor(const Coequalizer& ce, TMor h) = 0;
};

using TargetPtr = std::shared_ptr<TargetCategory>;

// The skeleton of pointed finite sets: object n is {*, 1, ..., n}, morphisms
// are basepoint-preserving maps. Canonical colimit representatives relabel
// quotient classes by first occurrence in (component index, element) order.
TargetPtr make_pointed_sets();

// Finite-dimensional F_p vector spaces: object n is F_p^n, morphisms are
// matrices in column-major order. Coequalizers are cokernels with a fixed
// row-reduction pivot rule for canonical bases.
TargetPtr make_fp_vect(int p);

// Pointed-set helpers used by builtins and tests.
TObj pset_object(TargetCategory& c, int n);
int pset_size(const TargetCategory& c, TObj a);                // non-basepoint count
TMor pset_mor(TargetCategory& c, int dom_n, int cod_n, const std::vector<int>& images);
const std::vector<int>& pset_images(const TargetCategory& c, TMor m);
bool pset_injective(const TargetCategory& c, TMor m);

// F_p matrix helpers.
TObj vect_object(TargetCategory& c, int dim);
int vect_dim(const TargetCategory& c, TObj a);
TMor vect_mor(TargetCategory& c, int dom_dim, int cod_dim, const std::vector<int>& colmajor);
const std::vector<int>& vect_entries(const TargetCategory& c, TMor m);
bool vect_injective(const TargetCategory& c, TMor m);

}  // namespace waldcat
