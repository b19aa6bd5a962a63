#include <algorithm>
#include <functional>
#include <unordered_map>

#include "waldcat/target.hpp"

namespace waldcat {

namespace {

// Skeletal pointed finite sets. Object id n is the set {*, 1, ..., n} with
// basepoint * = element 0. Morphism values are interned image tables.
class PointedSetCategory final : public TargetCategory {
 public:
  struct MorData {
    int dom, cod;
    std::vector<int> img;  // img[x-1] for x = 1..dom; basepoint is fixed
    bool inj = false, iso = false, ident = false;
  };

  std::string name() const override { return "FinSet*"; }

  std::string object_label(TObj a) const override { return std::to_string(a.id); }

  std::string morphism_label(TMor m) const override {
    const MorData& d = mors_[m.id];
    std::string s = std::to_string(d.dom) + "->" + std::to_string(d.cod) + "[";
    for (size_t i = 0; i < d.img.size(); ++i) s += (i ? " " : "") + std::to_string(d.img[i]);
    return s + "]";
  }

  TObj obj(int n) {
    if (n < 0) throw EngineError("pointed set size negative");
    if (n > engine_config().max_set_elems) throw CapExceeded("pointed set size exceeds cap");
    return TObj{static_cast<uint32_t>(n)};
  }

  TMor mor(int dom, int cod, std::vector<int> img) {
    obj(dom);
    obj(cod);
    if (static_cast<int>(img.size()) != dom) throw EngineError("pointed map image table has wrong size");
    std::vector<uint32_t> key{static_cast<uint32_t>(dom), static_cast<uint32_t>(cod)};
    for (int x : img) {
      if (x < 0 || x > cod) throw EngineError("pointed map image out of range");
      key.push_back(static_cast<uint32_t>(x));
    }
    auto it = intern_.find(key);
    if (it != intern_.end()) return TMor{it->second};
    MorData d{dom, cod, std::move(img)};
    std::vector<char> seen(cod + 1, 0);
    d.inj = true;
    for (int x : d.img) {
      if (x == 0 || seen[x]) d.inj = false;
      if (x > 0) seen[x] = 1;
    }
    d.iso = d.inj && dom == cod;
    d.ident = dom == cod;
    for (int i = 0; i < dom && d.ident; ++i) d.ident = d.img[i] == i + 1;
    uint32_t id = static_cast<uint32_t>(mors_.size());
    mors_.push_back(std::move(d));
    intern_.emplace(std::move(key), id);
    return TMor{id};
  }

  const MorData& data(TMor m) const { return mors_[m.id]; }

  TObj dom(TMor m) const override { return TObj{static_cast<uint32_t>(mors_[m.id].dom)}; }
  TObj cod(TMor m) const override { return TObj{static_cast<uint32_t>(mors_[m.id].cod)}; }

  TMor identity(TObj a) override {
    std::vector<int> img(a.id);
    for (uint32_t i = 0; i < a.id; ++i) img[i] = static_cast<int>(i) + 1;
    return mor(static_cast<int>(a.id), static_cast<int>(a.id), std::move(img));
  }

  TMor compose(TMor g, TMor f) override {
    uint64_t key = (static_cast<uint64_t>(g.id) << 32) | f.id;
    auto it = compose_memo_.find(key);
    if (it != compose_memo_.end()) return it->second;
    const MorData& df = mors_[f.id];
    const MorData& dg = mors_[g.id];
    if (df.cod != dg.dom) throw EngineError("pointed sets: compose of non-composable pair");
    std::vector<int> img(df.dom);
    for (int i = 0; i < df.dom; ++i) {
      int mid = df.img[i];
      img[i] = mid == 0 ? 0 : dg.img[mid - 1];
    }
    TMor r = mor(df.dom, dg.cod, std::move(img));
    compose_memo_.emplace(key, r);
    return r;
  }

  bool is_identity(TMor m) override { return mors_[m.id].ident; }
  bool is_iso(TMor m) override { return mors_[m.id].iso; }

  TObj zero_object() override { return TObj{0}; }
  TMor from_zero(TObj a) override { return mor(0, static_cast<int>(a.id), {}); }
  TMor to_zero(TObj a) override { return mor(static_cast<int>(a.id), 0, std::vector<int>(a.id, 0)); }

  std::vector<TObj> skeleton(int bound) override {
    std::vector<TObj> r;
    for (int n = 0; n < bound; ++n) r.push_back(obj(n));
    return r;
  }

  std::vector<TMor> hom(TObj a, TObj b) override {
    const int n = static_cast<int>(a.id), m = static_cast<int>(b.id);
    double count = 1;
    for (int i = 0; i < n; ++i) count *= (m + 1);
    if (count > static_cast<double>(engine_config().max_enumeration))
      throw CapExceeded("pointed-set hom enumeration exceeds cap");
    std::vector<TMor> r;
    std::vector<int> img(n, 0);
    while (true) {
      r.push_back(mor(n, m, img));
      int i = 0;
      for (; i < n; ++i) {
        if (img[i] < m) {
          ++img[i];
          break;
        }
        img[i] = 0;
      }
      if (i == n) break;
    }
    return r;
  }

  Coproduct coproduct(std::span<const TObj> parts) override {
    int total = 0;
    for (TObj p : parts) total += static_cast<int>(p.id);
    Coproduct cp{obj(total), {}};
    int offset = 0;
    for (TObj p : parts) {
      std::vector<int> img(p.id);
      for (uint32_t i = 0; i < p.id; ++i) img[i] = offset + static_cast<int>(i) + 1;
      cp.injections.push_back(mor(static_cast<int>(p.id), total, std::move(img)));
      offset += static_cast<int>(p.id);
    }
    return cp;
  }

  TMor copair(const Coproduct& cp, std::span<const TMor> legs) override {
    if (legs.size() != cp.injections.size()) throw EngineError("copair: wrong number of legs");
    if (legs.empty()) throw EngineError("copair: empty coproduct needs explicit target");
    int target = mors_[legs[0].id].cod;
    std::vector<int> img(cp.obj.id, 0);
    for (size_t i = 0; i < legs.size(); ++i) {
      const MorData& inj = mors_[cp.injections[i].id];
      const MorData& leg = mors_[legs[i].id];
      if (leg.dom != inj.dom || leg.cod != target) throw EngineError("copair: leg endpoints mismatch");
      for (int x = 0; x < inj.dom; ++x) img[inj.img[x] - 1] = leg.img[x];
    }
    const int total = static_cast<int>(img.size());
    return mor(total, target, std::move(img));
  }

  Coequalizer coequalizer(TMor f, TMor g) override {
    const MorData& df = mors_[f.id];
    const MorData& dg = mors_[g.id];
    if (df.dom != dg.dom || df.cod != dg.cod) throw EngineError("coequalizer: pair not parallel");
    const int b = df.cod;
    std::vector<int> parent(b + 1);
    for (int i = 0; i <= b; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int x = 0; x < df.dom; ++x) {
      int u = find(df.img[x]), v = find(dg.img[x]);
      if (u != v) parent[std::max(u, v)] = std::min(u, v);
    }
    // canonical labels: classes in order of their minimal element, basepoint first
    std::vector<int> label(b + 1, -1);
    label[find(0)] = 0;
    int next = 1;
    for (int x = 1; x <= b; ++x) {
      int r = find(x);
      if (label[r] < 0) label[r] = next++;
    }
    std::vector<int> img(b);
    for (int x = 1; x <= b; ++x) img[x - 1] = label[find(x)];
    return Coequalizer{obj(next - 1), mor(b, next - 1, std::move(img)), f, g};
  }

  TMor coeq_factor(const Coequalizer& ce, TMor h) override {
    const MorData& dp = mors_[ce.proj.id];
    const MorData& dh = mors_[h.id];
    if (dh.dom != dp.dom) throw EngineError("coeq_factor: domain mismatch");
    const int q = dp.cod;
    std::vector<int> img(q, -1);
    for (int x = 1; x <= dp.dom; ++x) {
      int c = dp.img[x - 1];
      int hv = dh.img[x - 1];
      if (c == 0) {
        if (hv != 0) throw EngineError("coeq_factor: map does not coequalize the pair");
        continue;
      }
      if (img[c - 1] < 0)
        img[c - 1] = hv;
      else if (img[c - 1] != hv)
        throw EngineError("coeq_factor: map does not coequalize the pair");
    }
    for (int& x : img)
      if (x < 0) x = 0;  // class not hit from outside the basepoint (cannot happen: proj is onto)
    return mor(q, dh.cod, std::move(img));
  }

 private:
  std::vector<MorData> mors_;
  std::unordered_map<std::vector<uint32_t>, uint32_t, VecHash> intern_;
  std::unordered_map<uint64_t, TMor> compose_memo_;
};

}  // namespace

TargetPtr make_pointed_sets() { return std::make_shared<PointedSetCategory>(); }

TObj pset_object(TargetCategory& c, int n) {
  return static_cast<PointedSetCategory&>(c).obj(n);
}

int pset_size(const TargetCategory& c, TObj a) {
  (void)c;
  return static_cast<int>(a.id);
}

TMor pset_mor(TargetCategory& c, int dom_n, int cod_n, const std::vector<int>& images) {
  return static_cast<PointedSetCategory&>(c).mor(dom_n, cod_n, images);
}

const std::vector<int>& pset_images(const TargetCategory& c, TMor m) {
  return static_cast<const PointedSetCategory&>(c).data(m).img;
}

bool pset_injective(const TargetCategory& c, TMor m) {
  return static_cast<const PointedSetCategory&>(c).data(m).inj;
}

}  // namespace waldcat
