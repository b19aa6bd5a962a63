#pragma once

#include <memory>
#include <unordered_map>

#include "waldcat/wald.hpp"

namespace waldcat {

// An n-cube in a Waldhausen category: a functor I^n -> target stored as
// vertex objects plus axis edges. Vertices are bitmasks; bit k-1 carries the
// paper's axis k, so axis n is the "last" axis and the recursive punctured
// colimit always splits on it.
struct Cube {
  WaldCat cat;
  int n = 0;
  std::vector<TObj> vertex;  // size 1<<n
  std::vector<TMor> edge;    // edge[v*n + k] raises bit k; valid iff bit k of v is 0

  uint32_t full() const { return (1u << n) - 1; }
  TObj at(uint32_t v) const { return vertex[v]; }
  TMor edge_at(uint32_t v, int k) const { return edge[static_cast<size_t>(v) * n + k]; }
};

// Validates 0 <= n, table sizes and commutativity of all 2-faces.
Cube make_cube(WaldCat cat, int n, std::vector<TObj> vertices, std::vector<TMor> edges);

Cube cube_from_diagram(const WaldCat& cat, const Diagram& D);  // D indexed by cube_cat(n)
Diagram cube_to_diagram(const Cube& I);

// Composite of axis edges from vertex `from` to `to` (bits ascending);
// well-defined by 2-face commutativity.
TMor path_composite(const Cube& I, uint32_t from, uint32_t to);

// The face I_{k eps}: fix the paper-style axis k (1-based) at eps.
Cube face(const Cube& I, int k, int eps);

// [alpha]: the (n+1)-cube (I => J) with the transformation along the last
// axis. Naturality is exactly commutativity of the new 2-faces and is
// verified by make_cube.
Cube arrow_cube(const Cube& I, const Cube& J, const std::vector<TMor>& alpha);

// Punctured colimit colim I' (I minus its terminal vertex) by the recursive
// pushout decomposition
//   colim I' = pushout( colim (I_{n1})' <- colim (I_{n0})' -> I(1,...,1,0) )
// with base cases colim I' = I(0) for n = 1 and the zero object for n = 0.
struct PColimNode;
struct PColim {
  TObj apex;
  std::vector<TMor> legs;  // per vertex mask; entry at the full mask is unused
  std::shared_ptr<const PColimNode> node;
};

// Shared memo tables for cube computations. Caches depend on the Waldhausen
// structure only through the target's morphism ids, except `good`, which also
// bakes in the cofibration predicate: use one context per WaldCat.
struct GoodResult {
  bool good = true;
  std::string witness;  // deepest failing face, or the failure reason
};

struct CubeCtx {
  std::unordered_map<std::vector<uint32_t>, std::shared_ptr<const PColim>, VecHash> pcolim;
  std::unordered_map<uint64_t, std::shared_ptr<const Pushout>> pushouts;
  std::unordered_map<std::vector<uint32_t>, GoodResult, VecHash> good;
};

PColim punctured_colimit(const Cube& I);
PColim punctured_colimit(const Cube& I, CubeCtx& ctx);

// Unique factorization of a punctured-cube cocone (legs per vertex, full mask
// ignored) through the punctured colimit; `target_obj` names the cocone apex.
TMor pcolim_factor(const Cube& I, const PColim& pc, const std::vector<TMor>& legs, TObj target_obj);

// colim I' -> I(1); for n = 0 this is 0 -> I(1), for n = 1 the edge itself.
TMor southern_arrow(const Cube& I);
TMor southern_arrow(const Cube& I, CubeCtx& ctx);

// Good = southern arrow exists and is a cofibration, recursively for all
// faces; 0-cubes are always good. A nonexistent southern arrow counts as
// not-good with the reason in the witness.
GoodResult is_good(const Cube& I);
GoodResult is_good(const Cube& I, CubeCtx& ctx);

// Vertexwise pushout of  K <=kappa= I =alpha=> J  for good I, J, K and good
// [alpha]; hypotheses are checked (HypothesisFailure names the culprit).
// When `verify` is set the theorem itself is asserted: [beta] must be good.
struct GoodPushout {
  Cube pushout_cube;        // J u_I K
  std::vector<TMor> beta;   // K => J u_I K
};
GoodPushout good_pushout(const Cube& I, const Cube& J, const Cube& K,
                         const std::vector<TMor>& alpha, const std::vector<TMor>& kappa,
                         bool verify = true);
GoodPushout good_pushout(const Cube& I, const Cube& J, const Cube& K,
                         const std::vector<TMor>& alpha, const std::vector<TMor>& kappa,
                         bool verify, CubeCtx& ctx);

// The n-cube of restricted colimits for a cover A = A_1 u ... u A_n: vertex
// eps has colim F over the intersection of the A_i with eps_i = 0 (the whole
// of A at the terminal vertex), with induced comparison edges.
Cube restricted_colimit_cube(const WaldCat& W, const Diagram& F, const std::vector<Subcategory>& covers);

}  // namespace waldcat
