#include "waldcat/fincat.hpp"

#include <algorithm>
#include <unordered_map>

namespace waldcat {

int FinCat::compose(int g, int f) const {
  if (f < 0 || g < 0 || f >= num_mors() || g >= num_mors())
    throw EngineError(name + ": morphism id out of range in compose");
  if (!composable(g, f))
    throw EngineError(name + ": compose of non-composable pair " + mors[g].name + " o " + mors[f].name);
  int r = comp[static_cast<size_t>(g) * mors.size() + f];
  if (r < 0) throw EngineError(name + ": composition table has a hole at " + mors[g].name + " o " + mors[f].name);
  return r;
}

Verdict FinCat::validate() const {
  Verdict v;
  if (static_cast<int>(idmor.size()) != num_obs()) {
    v.add("identity", "identities map not total");
    return v;
  }
  for (int o = 0; o < num_obs(); ++o) {
    int i = idmor[o];
    if (i < 0 || i >= num_mors() || mors[i].dom != o || mors[i].cod != o)
      v.add("identity", "identity of " + obs[o] + " is not an endomorphism");
  }
  if (comp.size() != mors.size() * mors.size()) {
    v.add("closure", "composition table has the wrong size");
    return v;
  }
  const int M = num_mors();
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f) {
      int r = comp[static_cast<size_t>(g) * M + f];
      if (!composable(g, f)) {
        if (r != -1) v.add("closure", "table set on non-composable pair (" + mors[g].name + "," + mors[f].name + ")");
        continue;
      }
      ++v.checked;
      if (r < 0 || r >= M) {
        v.add("closure", "missing composite " + mors[g].name + " o " + mors[f].name);
        continue;
      }
      if (mors[r].dom != mors[f].dom || mors[r].cod != mors[g].cod)
        v.add("closure", "composite " + mors[g].name + " o " + mors[f].name + " has wrong endpoints");
    }
  if (!v.ok) return v;
  for (int f = 0; f < M; ++f) {
    if (comp[static_cast<size_t>(f) * M + idmor[mors[f].dom]] != f)
      v.add("identity", "f o id != f for " + mors[f].name);
    if (comp[static_cast<size_t>(idmor[mors[f].cod]) * M + f] != f)
      v.add("identity", "id o f != f for " + mors[f].name);
  }
  for (int h = 0; h < M; ++h)
    for (int g = 0; g < M; ++g) {
      if (!composable(h, g)) continue;
      int hg = comp[static_cast<size_t>(h) * M + g];
      for (int f = 0; f < M; ++f) {
        if (!composable(g, f)) continue;
        int gf = comp[static_cast<size_t>(g) * M + f];
        ++v.checked;
        if (comp[static_cast<size_t>(h) * M + gf] != comp[static_cast<size_t>(hg) * M + f])
          v.add("assoc", "h(gf) != (hg)f at (" + mors[h].name + "," + mors[g].name + "," + mors[f].name + ")");
      }
    }
  return v;
}

void FinCat::seal() {
  if (num_obs() > engine_config().max_objects)
    throw CapExceeded(name + ": object count " + std::to_string(num_obs()) + " exceeds cap");
  Verdict v = validate();
  if (!v.ok) throw EngineError(name + ": invalid category: " + v.summary());
}

namespace {

// Builds a category from a poset: at most one morphism between two objects.
std::shared_ptr<FinCat> make_poset_cat(std::string name, std::vector<std::string> obnames,
                                       const std::function<bool(int, int)>& leq) {
  auto c = std::make_shared<FinCat>();
  c->name = std::move(name);
  c->obs = std::move(obnames);
  const int N = c->num_obs();
  std::vector<std::vector<int>> morid(N, std::vector<int>(N, -1));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (leq(a, b)) {
        morid[a][b] = c->num_mors();
        c->mors.push_back({c->obs[a] + "->" + c->obs[b], a, b});
      }
  c->idmor.resize(N);
  for (int a = 0; a < N; ++a) {
    c->idmor[a] = morid[a][a];
    c->mors[morid[a][a]].name = "id_" + c->obs[a];
  }
  const int M = c->num_mors();
  c->comp.assign(static_cast<size_t>(M) * M, -1);
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f)
      if (c->composable(g, f)) c->comp[static_cast<size_t>(g) * M + f] = morid[c->mors[f].dom][c->mors[g].cod];
  c->seal();
  return c;
}

}  // namespace

FinCatPtr terminal_cat() {
  static FinCatPtr c = make_poset_cat("1", {"*"}, [](int, int) { return true; });
  return c;
}

FinCatPtr interval_cat() {
  static FinCatPtr c = make_poset_cat("I", {"0", "1"}, [](int a, int b) { return a <= b; });
  return c;
}

FinCatPtr ordinal_cat(int n) {
  if (n < 0) throw EngineError("ordinal(n) needs n >= 0");
  static std::unordered_map<int, FinCatPtr> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back(std::to_string(i));
  auto c = make_poset_cat("[" + std::to_string(n) + "]", names, [](int a, int b) { return a <= b; });
  cache.emplace(n, c);
  return c;
}

FinCatPtr cube_cat(int n) {
  if (n < 0) throw EngineError("cube(n) needs n >= 0");
  if (n > engine_config().max_cube_dim) throw CapExceeded("cube dimension exceeds cap");
  static std::unordered_map<int, FinCatPtr> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::string> names;
  for (int v = 0; v < (1 << n); ++v) {
    std::string s;
    for (int k = 0; k < n; ++k) s += ((v >> k) & 1) ? '1' : '0';
    if (n == 0) s = "()";
    names.push_back(s);
  }
  auto c = make_poset_cat("I^" + std::to_string(n), names,
                          [](int a, int b) { return (a & ~b) == 0; });
  cache.emplace(n, c);
  return c;
}

int cube_vertex(int, uint32_t mask) { return static_cast<int>(mask); }

int cube_edge_mor(const FinCat& cube, uint32_t from_mask, uint32_t to_mask) {
  for (int m = 0; m < cube.num_mors(); ++m)
    if (cube.mors[m].dom == static_cast<int>(from_mask) && cube.mors[m].cod == static_cast<int>(to_mask))
      return m;
  throw EngineError("cube edge not found");
}

int ar_object(int n, int i, int j) {
  if (i < 0 || j < i || j > n) throw EngineError("Ar<n> pair out of range");
  int id = 0;
  for (int t = 0; t < i; ++t) id += n + 1 - t;
  return id + (j - i);
}

std::pair<int, int> ar_pair(int n, int id) {
  for (int i = 0; i <= n; ++i) {
    int row = n + 1 - i;
    if (id < row) return {i, i + id};
    id -= row;
  }
  throw EngineError("Ar<n> object id out of range");
}

FinCatPtr arrow_ordinal_cat(int n) {
  if (n < 0) throw EngineError("arrow_ordinal(n) needs n >= 0");
  static std::unordered_map<int, FinCatPtr> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      pairs.emplace_back(i, j);
      names.push_back(std::to_string(i) + "<=" + std::to_string(j));
    }
  auto c = make_poset_cat("Ar[" + std::to_string(n) + "]", names, [pairs](int a, int b) {
    return pairs[a].first <= pairs[b].first && pairs[a].second <= pairs[b].second;
  });
  cache.emplace(n, c);
  return c;
}

FinCatPtr span_cat() {
  // objects: 0 = left, 1 = middle, 2 = right; arrows 1->0 and 1->2
  auto c = std::make_shared<FinCat>();
  c->name = "span";
  c->obs = {"l", "m", "r"};
  c->mors = {{"id_l", 0, 0}, {"id_m", 1, 1}, {"id_r", 2, 2}, {"m->l", 1, 0}, {"m->r", 1, 2}};
  c->idmor = {0, 1, 2};
  const int M = 5;
  c->comp.assign(M * M, -1);
  auto set = [&](int g, int f, int r) { c->comp[g * M + f] = r; };
  for (int m = 0; m < M; ++m) {
    set(m, c->idmor[c->mors[m].dom], m);
    set(c->idmor[c->mors[m].cod], m, m);
  }
  c->seal();
  return c;
}

FinCatPtr parallel_pair_cat() {
  auto c = std::make_shared<FinCat>();
  c->name = "pair";
  c->obs = {"a", "b"};
  c->mors = {{"id_a", 0, 0}, {"id_b", 1, 1}, {"f", 0, 1}, {"g", 0, 1}};
  c->idmor = {0, 1};
  const int M = 4;
  c->comp.assign(M * M, -1);
  for (int m = 0; m < M; ++m) {
    c->comp[m * M + c->idmor[c->mors[m].dom]] = m;
    c->comp[c->idmor[c->mors[m].cod] * M + m] = m;
  }
  c->seal();
  return c;
}

FinCatPtr discrete_cat(int n) {
  auto c = std::make_shared<FinCat>();
  c->name = "disc" + std::to_string(n);
  for (int i = 0; i < n; ++i) {
    c->obs.push_back("d" + std::to_string(i));
    c->mors.push_back({"id_d" + std::to_string(i), i, i});
    c->idmor.push_back(i);
  }
  c->comp.assign(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) c->comp[static_cast<size_t>(i) * n + i] = i;
  c->seal();
  return c;
}

int product_obj_index(const std::vector<FinCatPtr>& fs, const std::vector<int>& parts) {
  int id = 0;
  for (size_t i = 0; i < fs.size(); ++i) id = id * fs[i]->num_obs() + parts[i];
  return id;
}

int product_mor_index(const std::vector<FinCatPtr>& fs, const std::vector<int>& parts) {
  int id = 0;
  for (size_t i = 0; i < fs.size(); ++i) id = id * fs[i]->num_mors() + parts[i];
  return id;
}

std::vector<int> product_obj_parts(const std::vector<FinCatPtr>& fs, int id) {
  std::vector<int> parts(fs.size());
  for (size_t i = fs.size(); i-- > 0;) {
    parts[i] = id % fs[i]->num_obs();
    id /= fs[i]->num_obs();
  }
  return parts;
}

std::vector<int> product_mor_parts(const std::vector<FinCatPtr>& fs, int id) {
  std::vector<int> parts(fs.size());
  for (size_t i = fs.size(); i-- > 0;) {
    parts[i] = id % fs[i]->num_mors();
    id /= fs[i]->num_mors();
  }
  return parts;
}

FinCatPtr product_cat(const std::vector<FinCatPtr>& fs) {
  if (fs.empty()) return terminal_cat();
  auto c = std::make_shared<FinCat>();
  c->name = "prod";
  size_t nobs = 1, nmors = 1;
  for (const auto& f : fs) {
    nobs *= f->num_obs();
    nmors *= f->num_mors();
    c->name += "_" + f->name;
  }
  if (nobs > static_cast<size_t>(engine_config().max_objects))
    throw CapExceeded("product category object count exceeds cap");
  if (nmors * nmors > engine_config().max_enumeration)
    throw CapExceeded("product category composition table exceeds cap");
  for (size_t o = 0; o < nobs; ++o) {
    auto parts = product_obj_parts(fs, static_cast<int>(o));
    std::string nm = "(";
    for (size_t i = 0; i < fs.size(); ++i) nm += (i ? "," : "") + fs[i]->obs[parts[i]];
    c->obs.push_back(nm + ")");
  }
  for (size_t m = 0; m < nmors; ++m) {
    auto parts = product_mor_parts(fs, static_cast<int>(m));
    std::vector<int> dp(fs.size()), cp(fs.size());
    std::string nm = "(";
    for (size_t i = 0; i < fs.size(); ++i) {
      dp[i] = fs[i]->mors[parts[i]].dom;
      cp[i] = fs[i]->mors[parts[i]].cod;
      nm += (i ? "," : "") + fs[i]->mors[parts[i]].name;
    }
    c->mors.push_back({nm + ")", product_obj_index(fs, dp), product_obj_index(fs, cp)});
  }
  c->idmor.resize(nobs);
  for (size_t o = 0; o < nobs; ++o) {
    auto parts = product_obj_parts(fs, static_cast<int>(o));
    std::vector<int> ip(fs.size());
    for (size_t i = 0; i < fs.size(); ++i) ip[i] = fs[i]->idmor[parts[i]];
    c->idmor[o] = product_mor_index(fs, ip);
  }
  c->comp.assign(nmors * nmors, -1);
  for (size_t g = 0; g < nmors; ++g) {
    auto gp = product_mor_parts(fs, static_cast<int>(g));
    for (size_t f = 0; f < nmors; ++f) {
      if (!c->composable(static_cast<int>(g), static_cast<int>(f))) continue;
      auto fp = product_mor_parts(fs, static_cast<int>(f));
      std::vector<int> rp(fs.size());
      for (size_t i = 0; i < fs.size(); ++i) rp[i] = fs[i]->compose(gp[i], fp[i]);
      c->comp[g * nmors + f] = product_mor_index(fs, rp);
    }
  }
  c->seal();
  return c;
}

Verdict check_functor(const FinFunctor& F) {
  Verdict v;
  const FinCat& S = *F.src;
  const FinCat& D = *F.dst;
  if (static_cast<int>(F.ob.size()) != S.num_obs() || static_cast<int>(F.mor.size()) != S.num_mors()) {
    v.add("total", "object/morphism map not total");
    return v;
  }
  for (int m = 0; m < S.num_mors(); ++m) {
    int fm = F.mor[m];
    if (fm < 0 || fm >= D.num_mors()) {
      v.add("total", "image of " + S.mors[m].name + " out of range");
      continue;
    }
    if (D.mors[fm].dom != F.ob[S.mors[m].dom] || D.mors[fm].cod != F.ob[S.mors[m].cod])
      v.add("endpoints", "image of " + S.mors[m].name + " has wrong dom/cod");
  }
  if (!v.ok) return v;
  for (int o = 0; o < S.num_obs(); ++o) {
    ++v.checked;
    if (F.mor[S.idmor[o]] != D.idmor[F.ob[o]])
      v.add("identity", "F(id_" + S.obs[o] + ") is not an identity");
  }
  for (int g = 0; g < S.num_mors(); ++g)
    for (int f = 0; f < S.num_mors(); ++f) {
      if (!S.composable(g, f)) continue;
      ++v.checked;
      if (F.mor[S.compose(g, f)] != D.compose(F.mor[g], F.mor[f]))
        v.add("composition",
              "F(g o f) != F(g) o F(f) for (g,f) = (" + S.mors[g].name + "," + S.mors[f].name + ")");
    }
  return v;
}

FinFunctor identity_functor(FinCatPtr c) {
  FinFunctor F{c, c, {}, {}};
  for (int o = 0; o < c->num_obs(); ++o) F.ob.push_back(o);
  for (int m = 0; m < c->num_mors(); ++m) F.mor.push_back(m);
  return F;
}

FinFunctor compose_functors(const FinFunctor& G, const FinFunctor& F) {
  if (F.dst.get() != G.src.get()) throw EngineError("compose_functors: interface mismatch");
  FinFunctor H{F.src, G.dst, {}, {}};
  for (int o : F.ob) H.ob.push_back(G.ob[o]);
  for (int m : F.mor) H.mor.push_back(G.mor[m]);
  return H;
}

namespace {

std::optional<int> unique_mor(const FinCat& c, int dom, int cod) {
  std::optional<int> found;
  for (int m = 0; m < c.num_mors(); ++m)
    if (c.mors[m].dom == dom && c.mors[m].cod == cod) {
      if (found) return std::nullopt;
      found = m;
    }
  return found;
}

FinFunctor poset_functor_on_objects(FinCatPtr src, FinCatPtr dst, const std::vector<int>& obmap,
                                    const std::string& what) {
  FinFunctor F{src, dst, obmap, {}};
  for (int m = 0; m < src->num_mors(); ++m) {
    auto target = unique_mor(*dst, obmap[src->mors[m].dom], obmap[src->mors[m].cod]);
    if (!target) throw EngineError(what + ": no unique image morphism");
    F.mor.push_back(*target);
  }
  return F;
}

}  // namespace

FinFunctor ar_face_functor(int n, int j) {
  if (n < 1 || j < 0 || j > n) throw EngineError("ar_face_functor: index out of range");
  auto src = arrow_ordinal_cat(n - 1);
  auto dst = arrow_ordinal_cat(n);
  auto delta = [&](int t) { return t < j ? t : t + 1; };
  std::vector<int> ob;
  for (int id = 0; id < src->num_obs(); ++id) {
    auto [a, b] = ar_pair(n - 1, id);
    ob.push_back(ar_object(n, delta(a), delta(b)));
  }
  return poset_functor_on_objects(src, dst, ob, "ar_face_functor");
}

FinFunctor ar_degeneracy_functor(int n, int j) {
  if (n < 0 || j < 0 || j > n) throw EngineError("ar_degeneracy_functor: index out of range");
  auto src = arrow_ordinal_cat(n + 1);
  auto dst = arrow_ordinal_cat(n);
  auto sigma = [&](int t) { return t <= j ? t : t - 1; };
  std::vector<int> ob;
  for (int id = 0; id < src->num_obs(); ++id) {
    auto [a, b] = ar_pair(n + 1, id);
    ob.push_back(ar_object(n, sigma(a), sigma(b)));
  }
  return poset_functor_on_objects(src, dst, ob, "ar_degeneracy_functor");
}

std::vector<int> Subcategory::objects() const {
  std::vector<int> r;
  for (int o = 0; o < parent->num_obs(); ++o)
    if (contains_obj(o)) r.push_back(o);
  return r;
}

std::vector<int> Subcategory::morphisms() const {
  std::vector<int> r;
  for (int m = 0; m < parent->num_mors(); ++m)
    if (mor_in[m]) r.push_back(m);
  return r;
}

Subcategory make_subcategory(FinCatPtr parent, const std::vector<int>& mor_ids) {
  Subcategory s{parent, std::vector<char>(parent->num_mors(), 0)};
  for (int m : mor_ids) {
    if (m < 0 || m >= parent->num_mors()) throw EngineError("subcategory: morphism id out of range");
    s.mor_in[m] = 1;
  }
  // close under endpoint identities, then verify composition closure
  for (int m = 0; m < parent->num_mors(); ++m)
    if (s.mor_in[m]) {
      s.mor_in[parent->idmor[parent->mors[m].dom]] = 1;
      s.mor_in[parent->idmor[parent->mors[m].cod]] = 1;
    }
  for (int g = 0; g < parent->num_mors(); ++g)
    for (int f = 0; f < parent->num_mors(); ++f)
      if (s.mor_in[g] && s.mor_in[f] && parent->composable(g, f) && !s.mor_in[parent->compose(g, f)])
        throw EngineError("subcategory: morphism set not closed under composition");
  return s;
}

Subcategory generated_subcategory(FinCatPtr parent, const std::vector<int>& gens) {
  std::vector<char> in(parent->num_mors(), 0);
  for (int m : gens) in[m] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int m = 0; m < parent->num_mors(); ++m)
      if (in[m]) {
        int i1 = parent->idmor[parent->mors[m].dom], i2 = parent->idmor[parent->mors[m].cod];
        if (!in[i1]) in[i1] = changed = true;
        if (!in[i2]) in[i2] = changed = true;
      }
    for (int g = 0; g < parent->num_mors(); ++g)
      for (int f = 0; f < parent->num_mors(); ++f)
        if (in[g] && in[f] && parent->composable(g, f)) {
          int r = parent->compose(g, f);
          if (!in[r]) in[r] = changed = true;
        }
  }
  std::vector<int> ids;
  for (int m = 0; m < parent->num_mors(); ++m)
    if (in[m]) ids.push_back(m);
  return make_subcategory(parent, ids);
}

Subcategory full_subcategory_all(FinCatPtr parent) {
  std::vector<int> all(parent->num_mors());
  for (int m = 0; m < parent->num_mors(); ++m) all[m] = m;
  return make_subcategory(parent, all);
}

Subcategory intersect(const Subcategory& a, const Subcategory& b) {
  if (a.parent.get() != b.parent.get()) throw EngineError("subcategory intersect: different parents");
  Subcategory s{a.parent, std::vector<char>(a.parent->num_mors(), 0)};
  for (int m = 0; m < a.parent->num_mors(); ++m) s.mor_in[m] = a.mor_in[m] && b.mor_in[m];
  return s;
}

bool covers_whole(const std::vector<Subcategory>& parts) {
  if (parts.empty()) return false;
  const FinCat& p = *parts[0].parent;
  for (int m = 0; m < p.num_mors(); ++m) {
    bool hit = false;
    for (const auto& s : parts) hit = hit || s.mor_in[m];
    if (!hit) return false;
  }
  return true;
}

}  // namespace waldcat
