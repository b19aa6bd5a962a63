#include "waldcat/wald.hpp"

namespace waldcat {

WaldCat builtin_finset_pointed(int maxsize) {
  if (maxsize < 1) throw EngineError("finset_pointed needs maxsize >= 1");
  TargetPtr base = make_pointed_sets();
  WaldCat W;
  W.name = "finset_pointed(" + std::to_string(maxsize) + ")";
  W.base = base;
  W.is_cofibration = [base](TMor m) { return pset_injective(*base, m); };
  W.is_weq = [base](TMor m) { return base->is_iso(m); };
  W.zero = base->zero_object();
  W.skel = base->skeleton(maxsize);  // sizes 1..maxsize, i.e. n = 0..maxsize-1
  return W;
}

WaldCat builtin_nstar(int maxn) {
  if (maxn < 0) throw EngineError("nstar needs maxn >= 0");
  WaldCat W = builtin_finset_pointed(maxn + 1);
  W.name = "nstar(" + std::to_string(maxn) + ")";
  return W;
}

WaldCat builtin_vect_fp(int p, int maxdim) {
  if (maxdim < 0) throw EngineError("vect_fp needs maxdim >= 0");
  TargetPtr base = make_fp_vect(p);
  WaldCat W;
  W.name = "vect_fp(" + std::to_string(p) + "," + std::to_string(maxdim) + ")";
  W.base = base;
  W.is_cofibration = [base](TMor m) { return vect_injective(*base, m); };
  W.is_weq = [base](TMor m) { return base->is_iso(m); };
  W.zero = base->zero_object();
  W.skel = base->skeleton(maxdim + 1);
  return W;
}

WaldCat builtin(const std::string& name, int size_param, int p) {
  if (name == "finset_pointed") return builtin_finset_pointed(size_param);
  if (name == "nstar") return builtin_nstar(size_param);
  if (name == "vect_fp") return builtin_vect_fp(p, size_param);
  throw EngineError("unknown builtin: " + name);
}

std::vector<TMor> skeleton_morphisms(const WaldCat& W) {
  std::vector<TMor> r;
  for (TObj a : W.skel)
    for (TObj b : W.skel)
      for (TMor m : W.cat().hom(a, b)) r.push_back(m);
  return r;
}

Pushout pushout_along_cofibration(const WaldCat& W, TMor f_cofib, TMor g) {
  if (!W.is_cofibration(f_cofib))
    throw UnsupportedOperation(W.name + ": pushout requested along a non-cofibration");
  return pushout(W.base, f_cofib, g);
}

std::vector<TMor> isos_between(TargetCategory& T, TObj a, TObj b) {
  std::vector<TMor> r;
  for (TMor m : T.hom(a, b))
    if (T.is_iso(m)) r.push_back(m);
  return r;
}

bool objects_isomorphic(TargetCategory& T, TObj a, TObj b) {
  return a == b || !isos_between(T, a, b).empty();
}

bool arrows_isomorphic(TargetCategory& T, TMor m1, TMor m2) {
  for (TMor phi : isos_between(T, T.dom(m1), T.dom(m2)))
    for (TMor psi : isos_between(T, T.cod(m1), T.cod(m2)))
      if (T.compose(psi, m1) == T.compose(m2, phi)) return true;
  return false;
}

namespace {

std::string mlabel(const WaldCat& W, TMor m) { return W.cat().morphism_label(m); }

}  // namespace

Verdict check_wald_axioms(const WaldCat& W, int max_objects) {
  Verdict v;
  TargetCategory& T = W.cat();
  if (static_cast<int>(W.skel.size()) > max_objects)
    throw CapExceeded(W.name + ": skeleton enumeration exceeds bound");

  std::vector<TMor> mors = skeleton_morphisms(W);

  // subcategory closure of cofibrations and weak equivalences
  for (TObj a : W.skel) {
    TMor id = T.identity(a);
    if (!W.is_cofibration(id)) v.add("W1", "identity of " + T.object_label(a) + " is not a cofibration");
    if (!W.is_weq(id)) v.add("W1", "identity of " + T.object_label(a) + " is not a weq");
  }
  for (TMor f : mors)
    for (TMor g : mors) {
      if (T.dom(g) != T.cod(f)) continue;
      ++v.checked;
      TMor gf = T.compose(g, f);
      if (W.is_cofibration(f) && W.is_cofibration(g) && !W.is_cofibration(gf))
        v.add("W1", "cofibrations not closed under composition at " + mlabel(W, g) + " o " + mlabel(W, f));
      if (W.is_weq(f) && W.is_weq(g) && !W.is_weq(gf))
        v.add("W1", "weqs not closed under composition at " + mlabel(W, g) + " o " + mlabel(W, f));
      // W2: two-out-of-three
      int count = (W.is_weq(f) ? 1 : 0) + (W.is_weq(g) ? 1 : 0) + (W.is_weq(gf) ? 1 : 0);
      if (count == 2)
        v.add("W2", "two of (f, g, gf) are weqs but not the third at f=" + mlabel(W, f) + " g=" + mlabel(W, g));
    }

  // W1: isos are cofibrations and weqs
  for (TMor m : mors) {
    if (!T.is_iso(m)) continue;
    ++v.checked;
    if (!W.is_cofibration(m)) v.add("W1", "iso not a cofibration: " + mlabel(W, m));
    if (!W.is_weq(m)) v.add("W1", "iso not a weq: " + mlabel(W, m));
  }

  // W3: zero object (initial and terminal on the skeleton), 0 -> a cofib
  for (TObj a : W.skel) {
    if (T.hom(W.zero, a).size() != 1)
      v.add("W3", "hom(0, " + T.object_label(a) + ") is not a singleton");
    if (T.hom(a, W.zero).size() != 1)
      v.add("W3", "hom(" + T.object_label(a) + ", 0) is not a singleton");
    if (!W.is_cofibration(T.from_zero(a)))
      v.add("W3", "0 -> " + T.object_label(a) + " is not a cofibration");
  }

  // W4: pushouts along cofibrations exist; cofibration leg pushes forward
  for (TMor f : mors) {
    if (!W.is_cofibration(f)) continue;
    for (TMor g : mors) {
      if (T.dom(g) != T.dom(f)) continue;
      ++v.checked;
      try {
        Pushout po = pushout(W.base, f, g);
        if (!W.is_cofibration(po.from_c))
          v.add("W4", "pushout of cofibration " + mlabel(W, f) + " along " + mlabel(W, g) +
                          " is not a cofibration");
      } catch (const EngineError& e) {
        v.add("W4", std::string("pushout missing: ") + e.what());
      }
    }
  }

  // W5: gluing lemma over all eligible diagrams
  //   b <- a >-g-> c   related to   b' <- a' >-g'-> c'
  // by weqs alpha, beta, gamma with commuting squares. When alpha is an iso
  // the bottom maps are determined by transport; otherwise they are
  // enumerated with the commutativity filter.
  auto w5_instance = [&](TMor f, TMor g, TMor f2, TMor g2, TMor alpha, TMor beta, TMor gamma) {
    ++v.checked;
    Pushout po1 = pushout(W.base, f, g);    // b u_a c
    Pushout po2 = pushout(W.base, f2, g2);  // b' u_a' c'
    TMor induced = pushout_factor(po1, T.compose(po2.from_b, beta), T.compose(po2.from_c, gamma));
    if (!W.is_weq(induced))
      v.add("W5", "glued map not a weq at f=" + mlabel(W, f) + " g=" + mlabel(W, g) +
                      " alpha=" + mlabel(W, alpha));
  };
  for (TMor alpha : mors) {
    if (!W.is_weq(alpha)) continue;
    TObj a = T.dom(alpha), a2 = T.cod(alpha);
    TMor alpha_inv{};
    bool invertible = false;
    if (T.is_iso(alpha))
      for (TMor m : T.hom(a2, a))
        if (T.compose(m, alpha) == T.identity(a) && T.compose(alpha, m) == T.identity(a2)) {
          alpha_inv = m;
          invertible = true;
          break;
        }
    for (TMor beta : mors) {
      if (!W.is_weq(beta)) continue;
      TObj b = T.dom(beta), b2 = T.cod(beta);
      for (TMor gamma : mors) {
        if (!W.is_weq(gamma)) continue;
        TObj c = T.dom(gamma), c2 = T.cod(gamma);
        for (TMor f : T.hom(a, b))
          for (TMor g : T.hom(a, c)) {
            if (!W.is_cofibration(g)) continue;
            if (invertible) {
              TMor f2 = T.compose(T.compose(beta, f), alpha_inv);
              TMor g2 = T.compose(T.compose(gamma, g), alpha_inv);
              if (!W.is_cofibration(g2)) continue;
              w5_instance(f, g, f2, g2, alpha, beta, gamma);
            } else {
              for (TMor f2 : T.hom(a2, b2)) {
                if (T.compose(beta, f) != T.compose(f2, alpha)) continue;
                for (TMor g2 : T.hom(a2, c2)) {
                  if (!W.is_cofibration(g2) || T.compose(gamma, g) != T.compose(g2, alpha)) continue;
                  w5_instance(f, g, f2, g2, alpha, beta, gamma);
                }
              }
            }
          }
      }
    }
  }
  return v;
}

}  // namespace waldcat
