#include <unordered_map>

#include "waldcat/target.hpp"

namespace waldcat {

namespace {

// Finite-dimensional F_p vector spaces. Object id = dimension; morphism
// values are interned column-major matrices with entries in 0..p-1.
class FpVectCategory final : public TargetCategory {
 public:
  explicit FpVectCategory(int p) : p_(p) {
    if (p < 2) throw EngineError("F_p needs p >= 2");
    for (int a = 1; a < p; ++a)
      for (int b = 1; b < p; ++b)
        if (a * b % p == 1) inv_.emplace(a, b);
    if (static_cast<int>(inv_.size()) != p - 1) throw EngineError("F_p needs p prime");
  }

  struct MorData {
    int cols, rows;            // dom dim, cod dim
    std::vector<int> e;        // e[c*rows + r]
    int rank = 0;
    bool ident = false;
  };

  std::string name() const override { return "Vect_F" + std::to_string(p_); }
  std::string object_label(TObj a) const override { return "F" + std::to_string(p_) + "^" + std::to_string(a.id); }

  std::string morphism_label(TMor m) const override {
    const MorData& d = mors_[m.id];
    std::string s = std::to_string(d.cols) + "->" + std::to_string(d.rows) + "[";
    for (size_t i = 0; i < d.e.size(); ++i) s += (i ? " " : "") + std::to_string(d.e[i]);
    return s + "]";
  }

  TObj obj(int dim) {
    if (dim < 0) throw EngineError("dimension negative");
    if (dim > engine_config().max_dim) throw CapExceeded("dimension exceeds cap");
    return TObj{static_cast<uint32_t>(dim)};
  }

  TMor mor(int dom_dim, int cod_dim, std::vector<int> entries) {
    obj(dom_dim);
    obj(cod_dim);
    if (static_cast<int>(entries.size()) != dom_dim * cod_dim)
      throw EngineError("matrix entry table has the wrong size");
    std::vector<uint32_t> key{static_cast<uint32_t>(dom_dim), static_cast<uint32_t>(cod_dim)};
    for (int& x : entries) {
      x = ((x % p_) + p_) % p_;
      key.push_back(static_cast<uint32_t>(x));
    }
    auto it = intern_.find(key);
    if (it != intern_.end()) return TMor{it->second};
    MorData d{dom_dim, cod_dim, std::move(entries)};
    d.rank = rank_of(d);
    d.ident = dom_dim == cod_dim;
    for (int c = 0; c < dom_dim && d.ident; ++c)
      for (int r = 0; r < cod_dim && d.ident; ++r) d.ident = d.e[c * cod_dim + r] == (r == c ? 1 : 0);
    uint32_t id = static_cast<uint32_t>(mors_.size());
    mors_.push_back(std::move(d));
    intern_.emplace(std::move(key), id);
    return TMor{id};
  }

  const MorData& data(TMor m) const { return mors_[m.id]; }

  TObj dom(TMor m) const override { return TObj{static_cast<uint32_t>(mors_[m.id].cols)}; }
  TObj cod(TMor m) const override { return TObj{static_cast<uint32_t>(mors_[m.id].rows)}; }

  TMor identity(TObj a) override {
    const int n = static_cast<int>(a.id);
    std::vector<int> e(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) e[i * n + i] = 1;
    return mor(n, n, std::move(e));
  }

  TMor compose(TMor g, TMor f) override {
    uint64_t key = (static_cast<uint64_t>(g.id) << 32) | f.id;
    auto it = compose_memo_.find(key);
    if (it != compose_memo_.end()) return it->second;
    const MorData& df = mors_[f.id];
    const MorData& dg = mors_[g.id];
    if (df.rows != dg.cols) throw EngineError("F_p vect: compose of non-composable pair");
    std::vector<int> e(static_cast<size_t>(df.cols) * dg.rows, 0);
    for (int c = 0; c < df.cols; ++c)
      for (int k = 0; k < df.rows; ++k) {
        int fv = df.e[c * df.rows + k];
        if (!fv) continue;
        for (int r = 0; r < dg.rows; ++r)
          e[c * dg.rows + r] = (e[c * dg.rows + r] + fv * dg.e[k * dg.rows + r]) % p_;
      }
    TMor res = mor(df.cols, dg.rows, std::move(e));
    compose_memo_.emplace(key, res);
    return res;
  }

  bool is_identity(TMor m) override { return mors_[m.id].ident; }
  bool is_iso(TMor m) override {
    const MorData& d = mors_[m.id];
    return d.rows == d.cols && d.rank == d.rows;
  }

  TObj zero_object() override { return TObj{0}; }
  TMor from_zero(TObj a) override { return mor(0, static_cast<int>(a.id), {}); }
  TMor to_zero(TObj a) override { return mor(static_cast<int>(a.id), 0, {}); }

  std::vector<TObj> skeleton(int bound) override {
    std::vector<TObj> r;
    for (int n = 0; n < bound; ++n) r.push_back(obj(n));
    return r;
  }

  std::vector<TMor> hom(TObj a, TObj b) override {
    const int cells = static_cast<int>(a.id * b.id);
    double count = 1;
    for (int i = 0; i < cells; ++i) count *= p_;
    if (count > static_cast<double>(engine_config().max_enumeration))
      throw CapExceeded("F_p hom enumeration exceeds cap");
    std::vector<TMor> r;
    std::vector<int> e(cells, 0);
    while (true) {
      r.push_back(mor(static_cast<int>(a.id), static_cast<int>(b.id), e));
      int i = 0;
      for (; i < cells; ++i) {
        if (e[i] < p_ - 1) {
          ++e[i];
          break;
        }
        e[i] = 0;
      }
      if (i == cells) break;
    }
    return r;
  }

  Coproduct coproduct(std::span<const TObj> parts) override {
    int total = 0;
    for (TObj q : parts) total += static_cast<int>(q.id);
    Coproduct cp{obj(total), {}};
    int offset = 0;
    for (TObj q : parts) {
      const int n = static_cast<int>(q.id);
      std::vector<int> e(static_cast<size_t>(n) * total, 0);
      for (int c = 0; c < n; ++c) e[c * total + offset + c] = 1;
      cp.injections.push_back(mor(n, total, std::move(e)));
      offset += n;
    }
    return cp;
  }

  TMor copair(const Coproduct& cp, std::span<const TMor> legs) override {
    if (legs.size() != cp.injections.size()) throw EngineError("copair: wrong number of legs");
    if (legs.empty()) throw EngineError("copair: empty coproduct needs explicit target");
    const int target = mors_[legs[0].id].rows;
    std::vector<int> e;
    int cols = 0;
    for (size_t i = 0; i < legs.size(); ++i) {
      const MorData& leg = mors_[legs[i].id];
      const MorData& inj = mors_[cp.injections[i].id];
      if (leg.cols != inj.cols || leg.rows != target) throw EngineError("copair: leg endpoints mismatch");
      e.insert(e.end(), leg.e.begin(), leg.e.end());
      cols += leg.cols;
    }
    if (cols != static_cast<int>(cp.obj.id)) throw EngineError("copair: component sizes mismatch");
    return mor(cols, target, std::move(e));
  }

  // Cokernel of f - g. Canonical form: reduced column echelon basis of
  // im(f-g) with topmost-nonzero pivot rule; the quotient coordinates are the
  // non-pivot rows of the reduced vectors.
  Coequalizer coequalizer(TMor f, TMor g) override {
    const MorData& df = mors_[f.id];
    const MorData& dg = mors_[g.id];
    if (df.cols != dg.cols || df.rows != dg.rows) throw EngineError("coequalizer: pair not parallel");
    const int b = df.rows, a = df.cols;
    std::vector<std::vector<int>> cols;
    for (int c = 0; c < a; ++c) {
      std::vector<int> v(b);
      for (int r = 0; r < b; ++r) v[r] = ((df.e[c * b + r] - dg.e[c * b + r]) % p_ + p_) % p_;
      cols.push_back(std::move(v));
    }
    auto [echelon, pivots] = column_echelon(cols, b);
    std::vector<int> nonpivot;
    {
      std::vector<char> isp(b, 0);
      for (int pr : pivots) isp[pr] = 1;
      for (int r = 0; r < b; ++r)
        if (!isp[r]) nonpivot.push_back(r);
    }
    const int q = static_cast<int>(nonpivot.size());
    std::vector<int> pe(static_cast<size_t>(b) * q, 0);
    for (int j = 0; j < b; ++j) {
      std::vector<int> v(b, 0);
      v[j] = 1;
      reduce_mod(echelon, pivots, v);
      for (int t = 0; t < q; ++t) pe[j * q + t] = v[nonpivot[t]];
    }
    return Coequalizer{obj(q), mor(b, q, std::move(pe)), f, g};
  }

  TMor coeq_factor(const Coequalizer& ce, TMor h) override {
    const MorData& dp = mors_[ce.proj.id];
    const MorData& dh = mors_[h.id];
    if (dh.cols != dp.cols) throw EngineError("coeq_factor: domain mismatch");
    // the non-pivot standard basis vectors are sections of proj
    const int b = dp.cols, q = dp.rows;
    std::vector<int> section_cols;  // for each quotient coord t, the row j with proj(e_j) = unit t
    section_cols.assign(q, -1);
    for (int j = 0; j < b; ++j) {
      int nz = -1;
      bool unit = true;
      for (int t = 0; t < q; ++t) {
        int v = dp.e[j * q + t];
        if (v == 1 && nz < 0)
          nz = t;
        else if (v != 0)
          unit = false;
      }
      if (unit && nz >= 0 && section_cols[nz] < 0) section_cols[nz] = j;
    }
    std::vector<int> e(static_cast<size_t>(q) * dh.rows, 0);
    for (int t = 0; t < q; ++t) {
      int j = section_cols[t];
      if (j < 0) throw EngineError("coeq_factor: projection has no unit section");
      for (int r = 0; r < dh.rows; ++r) e[t * dh.rows + r] = dh.e[j * dh.rows + r];
    }
    TMor u = mor(q, dh.rows, std::move(e));
    if (compose(u, ce.proj) != h) throw EngineError("coeq_factor: map does not coequalize the pair");
    return u;
  }

 private:
  int inv(int a) const { return inv_.at(((a % p_) + p_) % p_); }

  // Reduced column echelon form of the span of `cols`; returns echelon
  // columns ordered by pivot row, plus the pivot row list.
  std::pair<std::vector<std::vector<int>>, std::vector<int>> column_echelon(
      std::vector<std::vector<int>> cols, int b) const {
    std::vector<std::vector<int>> ech;
    std::vector<int> pivots;
    for (int r = 0; r < b; ++r) {
      int found = -1;
      for (size_t c = 0; c < cols.size(); ++c)
        if (cols[c][r] != 0) {
          bool clean = true;  // column must be zero above row r
          for (int rr = 0; rr < r; ++rr) clean = clean && cols[c][rr] == 0;
          if (clean) {
            found = static_cast<int>(c);
            break;
          }
        }
      if (found < 0) continue;
      std::vector<int> piv = cols[found];
      int s = inv(piv[r]);
      for (int& x : piv) x = x * s % p_;
      for (auto& c : cols) {
        int factor = c[r];
        if (!factor) continue;
        for (int rr = 0; rr < b; ++rr) c[rr] = ((c[rr] - factor * piv[rr]) % p_ + p_) % p_;
      }
      // keep earlier pivots out of this column
      for (size_t k = 0; k < ech.size(); ++k) {
        int factor = piv[pivots[k]];
        if (!factor) continue;
        for (int rr = 0; rr < b; ++rr) piv[rr] = ((piv[rr] - factor * ech[k][rr]) % p_ + p_) % p_;
      }
      ech.push_back(piv);
      pivots.push_back(r);
    }
    // final cleanup: make earlier echelon columns zero at later pivot rows
    for (size_t k = 0; k < ech.size(); ++k)
      for (size_t l = k + 1; l < ech.size(); ++l) {
        int factor = ech[k][pivots[l]];
        if (!factor) continue;
        for (int rr = 0; rr < b; ++rr) ech[k][rr] = ((ech[k][rr] - factor * ech[l][rr]) % p_ + p_) % p_;
      }
    return {ech, pivots};
  }

  void reduce_mod(const std::vector<std::vector<int>>& ech, const std::vector<int>& pivots,
                  std::vector<int>& v) const {
    for (size_t k = 0; k < ech.size(); ++k) {
      int factor = v[pivots[k]];
      if (!factor) continue;
      for (size_t rr = 0; rr < v.size(); ++rr) v[rr] = ((v[rr] - factor * ech[k][rr]) % p_ + p_) % p_;
    }
  }

  int rank_of(const MorData& d) const {
    std::vector<std::vector<int>> cols;
    for (int c = 0; c < d.cols; ++c) cols.emplace_back(d.e.begin() + c * d.rows, d.e.begin() + (c + 1) * d.rows);
    int rank = 0;
    for (int r = 0; r < d.rows; ++r) {
      int found = -1;
      for (size_t c = 0; c < cols.size(); ++c) {
        bool clean = cols[c][r] != 0;
        for (int rr = 0; rr < r && clean; ++rr) clean = cols[c][rr] == 0;
        if (clean) {
          found = static_cast<int>(c);
          break;
        }
      }
      if (found < 0) continue;
      ++rank;
      int s = inv(cols[found][r]);
      std::vector<int> piv = cols[found];
      for (int& x : piv) x = x * s % p_;
      for (auto& c : cols) {
        int factor = c[r];
        if (!factor) continue;
        for (int rr = 0; rr < d.rows; ++rr) c[rr] = ((c[rr] - factor * piv[rr]) % p_ + p_) % p_;
      }
    }
    return rank;
  }

  int p_;
  std::unordered_map<int, int> inv_;
  std::vector<MorData> mors_;
  std::unordered_map<std::vector<uint32_t>, uint32_t, VecHash> intern_;
  std::unordered_map<uint64_t, TMor> compose_memo_;
};

}  // namespace

TargetPtr make_fp_vect(int p) { return std::make_shared<FpVectCategory>(p); }

TObj vect_object(TargetCategory& c, int dim) { return static_cast<FpVectCategory&>(c).obj(dim); }

int vect_dim(const TargetCategory& c, TObj a) {
  (void)c;
  return static_cast<int>(a.id);
}

TMor vect_mor(TargetCategory& c, int dom_dim, int cod_dim, const std::vector<int>& colmajor) {
  return static_cast<FpVectCategory&>(c).mor(dom_dim, cod_dim, colmajor);
}

const std::vector<int>& vect_entries(const TargetCategory& c, TMor m) {
  return static_cast<const FpVectCategory&>(c).data(m).e;
}

bool vect_injective(const TargetCategory& c, TMor m) {
  const auto& d = static_cast<const FpVectCategory&>(c).data(m);
  return d.rank == d.cols;
}

}  // namespace waldcat
