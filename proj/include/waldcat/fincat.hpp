#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "waldcat/core.hpp"
#include "waldcat/report.hpp"

namespace waldcat {

// A finite category given by explicit tables: object names, morphisms with
// dom/cod, chosen identities, and a total composition table on composable
// pairs. Indices into `obs`/`mors` are the canonical ids used everywhere.
struct FinCat {
  struct Mor {
    std::string name;
    int dom = 0;
    int cod = 0;
  };

  std::string name;
  std::vector<std::string> obs;
  std::vector<Mor> mors;
  std::vector<int> idmor;       // object -> identity morphism id
  std::vector<int32_t> comp;    // comp[g * mors.size() + f] = g∘f, or -1

  int num_obs() const { return static_cast<int>(obs.size()); }
  int num_mors() const { return static_cast<int>(mors.size()); }

  bool composable(int g, int f) const { return mors[f].cod == mors[g].dom; }

  // g∘f; throws on non-composable pairs.
  int compose(int g, int f) const;

  bool is_identity(int m) const { return idmor[mors[m].dom] == m && mors[m].dom == mors[m].cod; }

  // Checks the category laws exhaustively: identities, closure of the
  // composition table, associativity on all composable triples.
  Verdict validate() const;

  // Finalizes a category whose `comp` table has been filled: checks sizes and
  // runs validate(), throwing EngineError on violations.
  void seal();
};

using FinCatPtr = std::shared_ptr<const FinCat>;

// Named index-category builders.
FinCatPtr terminal_cat();
FinCatPtr interval_cat();                       // 0 -> 1
FinCatPtr ordinal_cat(int n);                   // 0 < 1 < ... < n
FinCatPtr cube_cat(int n);                      // interval^n, objects are bitmasks
FinCatPtr arrow_ordinal_cat(int n);             // Ar<n>, objects are pairs i<=j
FinCatPtr product_cat(const std::vector<FinCatPtr>& factors);
FinCatPtr span_cat();                           // l <- m -> r
FinCatPtr parallel_pair_cat();                  // two arrows a => b
FinCatPtr discrete_cat(int n);

// Ar<n> object helpers: object id of the pair (i<=j) and back.
int ar_object(int n, int i, int j);
std::pair<int, int> ar_pair(int n, int id);

// cube_cat vertex/edge helpers. Vertex object id == bitmask. The edge from
// mask v (bit k == 0) raises bit k.
int cube_vertex(int n, uint32_t mask);
int cube_edge_mor(const FinCat& cube, uint32_t from_mask, uint32_t to_mask);

// Product category index helpers (row-major over factor object/morphism ids,
// first factor most significant).
int product_obj_index(const std::vector<FinCatPtr>& factors, const std::vector<int>& parts);
int product_mor_index(const std::vector<FinCatPtr>& factors, const std::vector<int>& parts);
std::vector<int> product_obj_parts(const std::vector<FinCatPtr>& factors, int id);
std::vector<int> product_mor_parts(const std::vector<FinCatPtr>& factors, int id);

// A functor between finite categories, stored as total object/morphism maps.
struct FinFunctor {
  FinCatPtr src;
  FinCatPtr dst;
  std::vector<int> ob;   // per src object
  std::vector<int> mor;  // per src morphism
};

// Reports every identity/composition violation with the witnessing morphisms.
Verdict check_functor(const FinFunctor& F);

FinFunctor identity_functor(FinCatPtr c);
FinFunctor compose_functors(const FinFunctor& G, const FinFunctor& F);  // G∘F

// Ordinal operators <n-1> -> <n> (face, skips j) and <n+1> -> <n>
// (degeneracy, hits j twice), lifted to arrow categories Ar<.>.
FinFunctor ar_face_functor(int n, int j);        // Ar<n-1> -> Ar<n>
FinFunctor ar_degeneracy_functor(int n, int j);  // Ar<n+1> -> Ar<n>

// A subcategory represented as morphism-id subsets closed under composition
// and identities; objects are those whose identity is a member.
struct Subcategory {
  FinCatPtr parent;
  std::vector<char> mor_in;  // per parent morphism

  bool contains_obj(int o) const { return mor_in[parent->idmor[o]] != 0; }
  std::vector<int> objects() const;
  std::vector<int> morphisms() const;
};

// Builds a subcategory from a morphism set, closing under identities of
// endpoints; throws if the set is not closed under composition.
Subcategory make_subcategory(FinCatPtr parent, const std::vector<int>& mor_ids);

// Closure of a generating morphism set under identities and composition.
Subcategory generated_subcategory(FinCatPtr parent, const std::vector<int>& gens);

Subcategory full_subcategory_all(FinCatPtr parent);
Subcategory intersect(const Subcategory& a, const Subcategory& b);
bool covers_whole(const std::vector<Subcategory>& parts);

}  // namespace waldcat
