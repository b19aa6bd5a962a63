#include "waldcat/diagram.hpp"

namespace waldcat {

Verdict check_diagram(const Diagram& D) {
  Verdict v;
  const FinCat& J = *D.index;
  if (static_cast<int>(D.ob.size()) != J.num_obs() || static_cast<int>(D.mor.size()) != J.num_mors()) {
    v.add("total", "diagram tables not total");
    return v;
  }
  TargetCategory& T = *D.target;
  for (int m = 0; m < J.num_mors(); ++m) {
    if (T.dom(D.mor[m]) != D.ob[J.mors[m].dom] || T.cod(D.mor[m]) != D.ob[J.mors[m].cod])
      v.add("endpoints", "image of " + J.mors[m].name + " has wrong endpoints");
  }
  if (!v.ok) return v;
  for (int o = 0; o < J.num_obs(); ++o) {
    ++v.checked;
    if (D.mor[J.idmor[o]] != T.identity(D.ob[o]))
      v.add("identity", "image of id_" + J.obs[o] + " is not the identity");
  }
  for (int g = 0; g < J.num_mors(); ++g)
    for (int f = 0; f < J.num_mors(); ++f) {
      if (!J.composable(g, f)) continue;
      ++v.checked;
      if (D.mor[J.compose(g, f)] != T.compose(D.mor[g], D.mor[f]))
        v.add("composition", "D(g o f) != D(g) o D(f) at (" + J.mors[g].name + "," + J.mors[f].name + ")");
    }
  return v;
}

Diagram precompose(const Diagram& D, const FinFunctor& F) {
  if (F.dst.get() != D.index.get()) throw EngineError("precompose: index mismatch");
  Diagram R{F.src, D.target, {}, {}};
  for (int o : F.ob) R.ob.push_back(D.ob[o]);
  for (int m : F.mor) R.mor.push_back(D.mor[m]);
  return R;
}

Restriction restrict(const Diagram& D, const Subcategory& S) {
  if (S.parent.get() != D.index.get()) throw EngineError("restrict: subcategory of a different index");
  auto sub = std::make_shared<FinCat>();
  sub->name = D.index->name + "|sub";
  std::vector<int> obj_of = S.objects();
  std::vector<int> mor_of = S.morphisms();
  std::vector<int> obj_pos(D.index->num_obs(), -1), mor_pos(D.index->num_mors(), -1);
  for (size_t i = 0; i < obj_of.size(); ++i) obj_pos[obj_of[i]] = static_cast<int>(i);
  for (size_t i = 0; i < mor_of.size(); ++i) mor_pos[mor_of[i]] = static_cast<int>(i);
  for (int o : obj_of) sub->obs.push_back(D.index->obs[o]);
  for (int m : mor_of) {
    const auto& pm = D.index->mors[m];
    sub->mors.push_back({pm.name, obj_pos[pm.dom], obj_pos[pm.cod]});
  }
  for (int o : obj_of) sub->idmor.push_back(mor_pos[D.index->idmor[o]]);
  const int M = sub->num_mors();
  sub->comp.assign(static_cast<size_t>(M) * M, -1);
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f)
      if (sub->composable(g, f)) sub->comp[static_cast<size_t>(g) * M + f] = mor_pos[D.index->compose(mor_of[g], mor_of[f])];
  sub->seal();

  Diagram R{sub, D.target, {}, {}};
  for (int o : obj_of) R.ob.push_back(D.ob[o]);
  for (int m : mor_of) R.mor.push_back(D.mor[m]);
  return {std::move(R), std::move(obj_of)};
}

Verdict check_natural(const DNat& a) {
  Verdict v;
  if (a.src.index.get() != a.dst.index.get() || a.src.target.get() != a.dst.target.get()) {
    v.add("shape", "natural transformation between diagrams of different shape");
    return v;
  }
  const FinCat& J = *a.src.index;
  TargetCategory& T = *a.src.target;
  if (static_cast<int>(a.comp.size()) != J.num_obs()) {
    v.add("total", "component table not total");
    return v;
  }
  for (int o = 0; o < J.num_obs(); ++o)
    if (T.dom(a.comp[o]) != a.src.ob[o] || T.cod(a.comp[o]) != a.dst.ob[o])
      v.add("endpoints", "component at " + J.obs[o] + " has wrong endpoints");
  if (!v.ok) return v;
  for (int m = 0; m < J.num_mors(); ++m) {
    ++v.checked;
    const auto& jm = J.mors[m];
    if (T.compose(a.comp[jm.cod], a.src.mor[m]) != T.compose(a.dst.mor[m], a.comp[jm.dom]))
      v.add("naturality", "square at " + jm.name + " does not commute");
  }
  return v;
}

Colimit colimit(const Diagram& D) {
  const FinCat& J = *D.index;
  TargetCategory& T = *D.target;
  // vertex coproduct ∐_A D(A)
  Coproduct vc = T.coproduct(D.ob);
  // morphism coproduct over non-identity morphisms
  std::vector<int> rel;
  std::vector<TObj> rel_obs;
  for (int m = 0; m < J.num_mors(); ++m)
    if (!J.is_identity(m)) {
      rel.push_back(m);
      rel_obs.push_back(D.ob[J.mors[m].dom]);
    }
  Colimit c;
  c.vertex_coprod = vc;
  if (rel.empty()) {
    // coequalizer of an identity pair: the coproduct itself, with a genuine
    // Coequalizer record so factoring works uniformly
    TMor idc = T.identity(vc.obj);
    c.coeq = T.coequalizer(idc, idc);
  } else {
    Coproduct mc = T.coproduct(rel_obs);
    std::vector<TMor> s_legs, t_legs;
    for (size_t i = 0; i < rel.size(); ++i) {
      const auto& jm = J.mors[rel[i]];
      s_legs.push_back(vc.injections[jm.dom]);
      t_legs.push_back(T.compose(vc.injections[jm.cod], D.mor[rel[i]]));
    }
    TMor s = T.copair(mc, s_legs);
    TMor t = T.copair(mc, t_legs);
    c.coeq = T.coequalizer(s, t);
  }
  c.apex = c.coeq.obj;
  for (int o = 0; o < J.num_obs(); ++o) c.legs.push_back(T.compose(c.coeq.proj, vc.injections[o]));
  return c;
}

TMor factor_cocone(const Colimit& c, const Diagram& D, std::span<const TMor> legs) {
  TargetCategory& T = *D.target;
  if (legs.size() != D.ob.size()) throw EngineError("factor_cocone: wrong number of legs");
  if (legs.empty()) throw EngineError("factor_cocone: empty diagram needs explicit target");
  TMor h = T.copair(c.vertex_coprod, legs);
  TMor u = T.coeq_factor(c.coeq, h);
  return u;
}

Pushout pushout(TargetPtr target, TMor f, TMor g) {
  TargetCategory& T = *target;
  if (T.dom(f) != T.dom(g)) throw EngineError("pushout: span legs have different domains");
  static FinCatPtr shape = span_cat();
  // span objects: 0 = l (cod f), 1 = m (common dom), 2 = r (cod g)
  Diagram D{shape, target, {T.cod(f), T.dom(f), T.cod(g)}, {}};
  D.mor = {T.identity(D.ob[0]), T.identity(D.ob[1]), T.identity(D.ob[2]), f, g};
  Colimit c = colimit(D);
  Pushout po;
  po.obj = c.apex;
  po.from_b = c.legs[0];
  po.from_c = c.legs[2];
  po.from_a = c.legs[1];
  po.colim = std::move(c);
  po.span = std::move(D);
  return po;
}

TMor pushout_factor(const Pushout& po, TMor leg_b, TMor leg_c) {
  TargetCategory& T = *po.span.target;
  std::vector<TMor> legs{leg_b, T.compose(leg_b, po.span.mor[3]), leg_c};
  return factor_cocone(po.colim, po.span, legs);
}

}  // namespace waldcat
