#pragma once

// Temperley-Lieb diagrams and morphisms, Jones-Wenzl projectors, the Markov
// trace, and the functor F into graded bifactorisations generated by T, u, n.

#include <map>

#include "graded.hpp"

namespace mfcft {

// Boundary points: bottom 0..nb-1 left to right, then top nb..nb+nt-1 left to right.
struct TLDiagram {
  int nb = 0, nt = 0;
  std::vector<int> pair;

  int size() const { return nb + nt; }
  friend bool operator<(const TLDiagram& a, const TLDiagram& b) {
    return std::tie(a.nb, a.nt, a.pair) < std::tie(b.nb, b.nt, b.pair);
  }
  friend bool operator==(const TLDiagram& a, const TLDiagram& b) {
    return a.nb == b.nb && a.nt == b.nt && a.pair == b.pair;
  }

  // position on the boundary circle: bottom left to right, top right to left
  int circle(int p) const { return p < nb ? p : nb + (nt - 1 - (p - nb)); }

  bool valid() const {
    int n = size();
    if (n % 2 || static_cast<int>(pair.size()) != n) return false;
    for (int p = 0; p < n; ++p)
      if (pair[p] < 0 || pair[p] >= n || pair[p] == p || pair[pair[p]] != p) return false;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        int a = circle(p), b = circle(pair[p]), c = circle(q), d = circle(pair[q]);
        if (a > b) std::swap(a, b);
        if (c > d) std::swap(c, d);
        if (a < c && c < b && b < d) return false;
      }
    return true;
  }

  static TLDiagram identity(int n) {
    TLDiagram D{n, n, std::vector<int>(2 * n)};
    for (int i = 0; i < n; ++i) D.pair[i] = n + i, D.pair[n + i] = i;
    return D;
  }

  std::string str() const {
    std::string s = std::to_string(nb) + "->" + std::to_string(nt) + "[";
    for (int p = 0; p < size(); ++p)
      if (p < pair[p]) s += "(" + std::to_string(p) + "," + std::to_string(pair[p]) + ")";
    return s + "]";
  }
};

// all planar diagrams nb -> nt
inline std::vector<TLDiagram> tl_basis(int nb, int nt) {
  std::vector<TLDiagram> out;
  int n = nb + nt;
  if (n % 2) return out;
  TLDiagram proto{nb, nt, std::vector<int>(n, -1)};
  std::vector<int> at(n);  // circle position -> point
  for (int p = 0; p < n; ++p) at[proto.circle(p)] = p;
  std::vector<int> cpair(n, -1);
  std::function<void(int)> rec = [&](int lo) {
    while (lo < n && cpair[lo] >= 0) ++lo;
    if (lo == n) {
      TLDiagram D = proto;
      for (int c = 0; c < n; ++c) D.pair[at[c]] = at[cpair[c]];
      out.push_back(D);
      return;
    }
    // partner must leave an even, self-contained stretch between them
    for (int hi = lo + 1; hi < n; hi += 2) {
      bool free = true;
      for (int c = lo + 1; c < hi && free; ++c) free = cpair[c] < 0 || (cpair[c] > lo && cpair[c] < hi);
      if (!free || cpair[hi] >= 0) continue;
      cpair[lo] = hi, cpair[hi] = lo;
      rec(lo + 1);
      cpair[lo] = cpair[hi] = -1;
    }
  };
  rec(0);
  return out;
}

inline long tl_dim(int n) { return static_cast<long>(tl_basis(n, n).size()); }

// stack g (below) then f (above); returns the diagram and the number of closed loops
inline std::pair<TLDiagram, int> stack(const TLDiagram& f, const TLDiagram& g) {
  if (g.nt != f.nb) throw StrandMismatch("composition of diagrams with different strand counts");
  int a = g.nb, b = g.nt, c = f.nt;
  // nodes: g bottom 0..a-1, middle a..a+b-1, f top a+b..a+b+c-1
  auto g_partner = [&](int node) {  // node in g bottom or middle
    int p = node < a ? node : a + (node - a);
    int q = g.pair[p];
    return q < a ? q : a + (q - a);
  };
  auto f_partner = [&](int node) {  // node in middle or f top
    int p = node < a + b ? node - a : b + (node - a - b);
    int q = f.pair[p];
    return q < b ? a + q : a + b + (q - b);
  };
  TLDiagram D{a, c, std::vector<int>(a + c, -1)};
  auto outer_index = [&](int node) { return node < a ? node : a + (node - a - b); };
  std::vector<bool> seen(a + b + c, false);
  auto walk = [&](int start, bool in_g) {
    int node = start;
    seen[node] = true;
    for (;;) {
      int nxt = in_g ? g_partner(node) : f_partner(node);
      seen[nxt] = true;
      if (nxt < a || nxt >= a + b) return nxt;
      node = nxt;
      seen[node] = true;
      in_g = !in_g;
    }
  };
  for (int s = 0; s < a; ++s)
    if (!seen[s]) {
      int e = walk(s, true);
      D.pair[outer_index(s)] = outer_index(e), D.pair[outer_index(e)] = outer_index(s);
    }
  for (int s = a + b; s < a + b + c; ++s)
    if (!seen[s]) {
      int e = walk(s, false);
      D.pair[outer_index(s)] = outer_index(e), D.pair[outer_index(e)] = outer_index(s);
    }
  int loops = 0;
  for (int s = a; s < a + b; ++s) {
    if (seen[s]) continue;
    ++loops;
    int node = s;
    bool in_g = true;
    do {
      seen[node] = true;
      node = in_g ? g_partner(node) : f_partner(node);
      seen[node] = true;
      in_g = !in_g;
    } while (node != s);
  }
  return {D, loops};
}

inline TLDiagram juxtapose(const TLDiagram& f, const TLDiagram& g) {
  TLDiagram D{f.nb + g.nb, f.nt + g.nt, {}};
  D.pair.assign(D.size(), -1);
  auto mf = [&](int p) { return p < f.nb ? p : D.nb + (p - f.nb); };
  auto mg = [&](int p) { return p < g.nb ? f.nb + p : D.nb + f.nt + (p - g.nb); };
  for (int p = 0; p < f.size(); ++p) D.pair[mf(p)] = mf(f.pair[p]);
  for (int p = 0; p < g.size(); ++p) D.pair[mg(p)] = mg(g.pair[p]);
  return D;
}

struct TLMorphism {
  int src = 0, tgt = 0;
  CycNum kappa;
  std::map<TLDiagram, CycNum> terms;

  static TLMorphism diagram(const TLDiagram& D, const CycNum& kappa, const CycNum& c = CycNum(1)) {
    TLMorphism m{D.nb, D.nt, kappa, {}};
    if (!c.is_zero()) m.terms[D] = c;
    return m;
  }
  static TLMorphism identity(int n, const CycNum& kappa) { return diagram(TLDiagram::identity(n), kappa); }
  static TLMorphism zero(int s, int t, const CycNum& kappa) { return {s, t, kappa, {}}; }

  void add(const TLDiagram& D, const CycNum& c) {
    CycNum v = terms[D] + c;
    if (v.is_zero())
      terms.erase(D);
    else
      terms[D] = v;
  }
  bool is_zero() const { return terms.empty(); }
  friend TLMorphism operator+(const TLMorphism& a, const TLMorphism& b) {
    if (a.src != b.src || a.tgt != b.tgt) throw StrandMismatch("sum of TL morphisms");
    TLMorphism r = a;
    for (auto& [D, c] : b.terms) r.add(D, c);
    return r;
  }
  TLMorphism scaled(const CycNum& c) const {
    TLMorphism r{src, tgt, kappa, {}};
    if (c.is_zero()) return r;
    for (auto& [D, v] : terms) r.terms[D] = v * c;
    return r;
  }
  friend TLMorphism operator-(const TLMorphism& a, const TLMorphism& b) { return a + b.scaled(CycNum(-1)); }
  friend bool operator==(const TLMorphism& a, const TLMorphism& b) {
    return a.src == b.src && a.tgt == b.tgt && (a - b).is_zero();
  }
};

// f after g
inline TLMorphism tl_compose(const TLMorphism& f, const TLMorphism& g) {
  if (g.tgt != f.src) throw StrandMismatch("composition of TL morphisms with different strand counts");
  TLMorphism r{g.src, f.tgt, f.kappa, {}};
  for (auto& [Df, cf] : f.terms)
    for (auto& [Dg, cg] : g.terms) {
      auto [D, loops] = stack(Df, Dg);
      r.add(D, cf * cg * f.kappa.pow(loops));
    }
  return r;
}

inline TLMorphism tl_tensor(const TLMorphism& f, const TLMorphism& g) {
  TLMorphism r{f.src + g.src, f.tgt + g.tgt, f.kappa, {}};
  for (auto& [Df, cf] : f.terms)
    for (auto& [Dg, cg] : g.terms) r.add(juxtapose(Df, Dg), cf * cg);
  return r;
}

inline TLDiagram cap_diagram() { return {2, 0, {1, 0}}; }
inline TLDiagram cup_diagram() { return {0, 2, {1, 0}}; }

// e_i on n strands, 1 <= i < n
inline TLMorphism tl_e(int n, int i, const CycNum& kappa) {
  if (i < 1 || i >= n) throw OutOfRange("generator index out of range");
  TLDiagram cc = stack(cup_diagram(), cap_diagram()).first;
  TLDiagram D = juxtapose(juxtapose(TLDiagram::identity(i - 1), cc), TLDiagram::identity(n - i - 1));
  return TLMorphism::diagram(D, kappa);
}

inline TLMorphism tl_cap(int n, int i, const CycNum& kappa) {  // n -> n-2, cap on strands i, i+1 (1-based)
  TLDiagram D = juxtapose(juxtapose(TLDiagram::identity(i - 1), cap_diagram()), TLDiagram::identity(n - i - 1));
  return TLMorphism::diagram(D, kappa);
}

inline TLMorphism tl_cup(int n, int i, const CycNum& kappa) {  // n -> n+2, cup lands on strands i, i+1
  TLDiagram D = juxtapose(juxtapose(TLDiagram::identity(i - 1), cup_diagram()), TLDiagram::identity(n - i + 1));
  return TLMorphism::diagram(D, kappa);
}

// Jones-Wenzl projector on n strands
inline TLMorphism jw(const Setting& st, int n) {
  if (n < 0) throw OutOfRange("negative strand count");
  CycNum kappa = st.kappa();
  TLMorphism p = TLMorphism::identity(std::min(n, 1), kappa);
  if (n == 0) return p;
  for (int k = 1; k < n; ++k) {
    CycNum qk1 = st.qint(k + 1);
    if (qk1.is_zero()) throw UndefinedProjector("quantum integer [" + std::to_string(k + 1) + "] vanishes");
    TLMorphism pk = tl_tensor(p, TLMorphism::identity(1, kappa));
    TLMorphism mid = tl_compose(pk, tl_compose(tl_e(k + 1, k, kappa), pk));
    p = pk - mid.scaled(st.qint(k) / qk1);
  }
  return p;
}

// Markov closure
inline CycNum tl_trace(const TLMorphism& f) {
  if (f.src != f.tgt) throw StrandMismatch("trace of a non-endomorphism");
  int n = f.src;
  CycNum r;
  for (auto& [D, c] : f.terms) {
    // close strand j: top n+j joins bottom j
    std::vector<bool> seen(2 * n, false);
    int loops = 0;
    for (int s = 0; s < 2 * n; ++s) {
      if (seen[s]) continue;
      ++loops;
      int p = s;
      do {
        seen[p] = true;
        int q = D.pair[p];
        seen[q] = true;
        p = q < n ? n + q : q - n;
      } while (p != s);
    }
    r += c * f.kappa.pow(loops);
  }
  return r;
}

// ---------------------------------------------------------------- elementary layers

struct TLLayer {
  bool cap;  // cap: n -> n-2, cup: n -> n+2
  int pos;   // 0-based left strand of the pair
  int n;     // strand count below the layer
};

inline TLDiagram remove_points(const TLDiagram& D, int p, int q, bool bottom) {
  TLDiagram R{D.nb - (bottom ? 2 : 0), D.nt - (bottom ? 0 : 2), {}};
  std::vector<int> newid(D.size(), -1);
  int k = 0;
  for (int i = 0; i < D.size(); ++i)
    if (i != p && i != q) newid[i] = k++;
  R.pair.assign(R.size(), -1);
  for (int i = 0; i < D.size(); ++i)
    if (newid[i] >= 0) R.pair[newid[i]] = newid[D.pair[i]];
  return R;
}

// bottom-first list of cap/cup layers whose composite is D
inline std::vector<TLLayer> layers_of(TLDiagram D) {
  std::vector<TLLayer> below, above;
  for (;;) {
    bool done = true;
    for (int i = 0; i + 1 < D.nb; ++i)
      if (D.pair[i] == i + 1) {
        below.push_back({true, i, D.nb});
        D = remove_points(D, i, i + 1, true);
        done = false;
        break;
      }
    if (!done) continue;
    for (int j = 0; j + 1 < D.nt; ++j)
      if (D.pair[D.nb + j] == D.nb + j + 1) {
        above.push_back({false, j, D.nt - 2});
        D = remove_points(D, D.nb + j, D.nb + j + 1, false);
        done = false;
        break;
      }
    if (done) break;
  }
  if (D.nb != D.nt || !(D == TLDiagram::identity(D.nb))) throw Error("diagram does not reduce to an identity");
  std::vector<TLLayer> out = below;
  out.insert(out.end(), above.rbegin(), above.rend());
  return out;
}

// ---------------------------------------------------------------- the functor F

class TLFunctor {
 public:
  explicit TLFunctor(const Setting& st) : st_(st) {
    require_odd(st.d);
    T_ = hat_p(st, self_dual_label(st.d));
    I_ = graded_unit(st);
    D_ = duality_un(st, T_);
    D_.u.tgt = I_;
    D_.n.src = I_;
    D_.I = I_;
    pow_.push_back(I_);
    pow_.push_back(T_);
    lam_inv_ = solve_section(unit_left(I_, T_));
    rho_inv_ = solve_section(unit_right(T_, I_));
  }

  const Setting& setting() const { return st_; }
  const Obj& T() const { return T_; }
  const Obj& I() const { return I_; }
  const Duality& duality() const { return D_; }
  const MFMorphism& u() const { return D_.u; }
  const MFMorphism& n() const { return D_.n; }
  const MFMorphism& lambda_inv() const { return lam_inv_; }
  const MFMorphism& rho_inv() const { return rho_inv_; }

  // left-bracketed tensor power
  Obj power(int k) {
    while (static_cast<int>(pow_.size()) <= k) pow_.push_back(tensor_mf(pow_.back(), T_));
    return pow_[k];
  }
  MFMorphism id(int k) { return identity(power(k)); }

  MFMorphism lambda_inv_power(int j) {
    if (j == 1) return lam_inv_;
    Obj split = tensor_mf(T_, power(j - 1));
    MFMorphism m = tensor_mor(lam_inv_, id(j - 1));
    return compose_chain({reassociate(m.tgt, tensor_mf(I_, power(j))), m, reassociate(power(j), split)});
  }
  MFMorphism rho_inv_power(int i) {
    if (i == 1) return rho_inv_;
    MFMorphism m = tensor_mor(id(i - 1), rho_inv_);
    return compose(reassociate(m.tgt, tensor_mf(power(i), I_)), m);
  }

  MFMorphism layer(const TLLayer& L) {
    int i = L.pos;
    if (L.cap) {
      int j = L.n - 2 - i;
      MFMorphism m = i > 0 ? tensor_mor(id(i), D_.u) : D_.u;
      if (j > 0) m = tensor_mor(m, id(j));
      MFMorphism r = compose(m, reassociate(power(L.n), m.src));
      if (i > 0) {
        MFMorphism rho = unit_right(power(i), I_);
        r = compose(j > 0 ? tensor_mor(rho, id(j)) : rho, r);
      } else if (j > 0) {
        r = compose(unit_left(I_, power(j)), r);
      }
      if (i > 0 && j > 0) r = compose(reassociate(r.tgt, power(L.n - 2)), r);
      r.name = "cap" + std::to_string(i) + "/" + std::to_string(L.n);
      return r;
    }
    int j = L.n - i;
    MFMorphism r;
    if (i > 0) {
      MFMorphism a = rho_inv_power(i);
      MFMorphism b = tensor_mor(id(i), D_.n);
      if (j > 0) {
        a = compose(tensor_mor(a, id(j)), reassociate(power(L.n), tensor_mf(power(i), power(j))));
        b = tensor_mor(b, id(j));
      }
      r = compose(b, a);
    } else if (j > 0) {
      r = compose(tensor_mor(D_.n, id(j)), lambda_inv_power(j));
    } else {
      r = D_.n;
    }
    r = compose(reassociate(r.tgt, power(L.n + 2)), r);
    r.name = "cup" + std::to_string(i) + "/" + std::to_string(L.n);
    return r;
  }

  MFMorphism evaluate(const TLDiagram& D) {
    MFMorphism r = id(D.nb);
    for (auto& L : layers_of(D)) r = compose(layer(L), r);
    return r;
  }

  MFMorphism evaluate(const TLMorphism& f) {
    MFMorphism r = zero_morphism(power(f.src), power(f.tgt));
    for (auto& [D, c] : f.terms) r = r + scaled(evaluate(D), c);
    r.name = "F";
    return r;
  }

 private:
  Setting st_;
  Obj T_, I_;
  Duality D_;
  std::vector<Obj> pow_;
  MFMorphism lam_inv_, rho_inv_;
};

inline MFMorphism evaluate_F(TLFunctor& F, const TLMorphism& f) { return F.evaluate(f); }

// the two zig-zag composites, each to be compared with 1_T
inline std::pair<MFMorphism, MFMorphism> zigzags(TLFunctor& F) {
  CycNum k = F.setting().kappa();
  TLMorphism z1 = tl_compose(tl_cap(3, 2, k), tl_cup(1, 1, k));
  TLMorphism z2 = tl_compose(tl_cap(3, 1, k), tl_cup(1, 2, k));
  return {F.evaluate(z1), F.evaluate(z2)};
}

// F(p_2) vanishes in the homotopy category for d = 3: precompose with the
// homology-certified equivalence I -> T (x) T and solve for a null-homotopy
struct JWVanishing {
  bool witness_iso = false;
  HomotopyResult homotopy;
};

inline JWVanishing jw_null_homotopy(TLFunctor& F) {
  const Setting& st = F.setting();
  if (st.d != 3) throw OutOfRange("direct null-homotopy is implemented for two strands");
  JWVanishing r;
  int a = (st.d - 1) / 2;
  GPair g = g_pair(st, a, a, st.d - 2);
  r.witness_iso = is_cycle(g.gm) && is_homotopy_iso(g.gm);
  MFMorphism Fp = F.evaluate(jw(st, 2));
  MFMorphism lhs = compose(Fp, g.gm);
  r.homotopy = homotopy_solve(lhs, zero_morphism(lhs.src, lhs.tgt));
  return r;
}

// dim End of (1 (x) p_{d-2}) in the diagram category, against dim End of
// T (x) P(a:d-2) on the bifactorisation side
struct EndCertificate {
  int tl_dim = 0;
  int mf_dim = 0;
  bool witness_iso = false;
};

inline int tl_end_dim(const Setting& st, int strands_in_projector) {
  CycNum k = st.kappa();
  TLMorphism P = tl_tensor(TLMorphism::identity(1, k), jw(st, strands_in_projector));
  int n = strands_in_projector + 1;
  auto basis = tl_basis(n, n);
  std::map<TLDiagram, int> idx;
  for (size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
  std::vector<std::vector<CycNum>> rows;
  for (auto& D : basis) {
    TLMorphism v = tl_compose(P, tl_compose(TLMorphism::diagram(D, k), P));
    std::vector<CycNum> row(basis.size(), CycNum());
    for (auto& [E, c] : v.terms) row[idx.at(E)] = c;
    rows.push_back(row);
  }
  return rank_of(rows);
}

inline EndCertificate jw_end_certificate(const Setting& st, int a) {
  int d = st.d;
  EndCertificate c;
  c.tl_dim = tl_end_dim(st, d - 2);
  GPair g = g_pair(st, (d - 1) / 2, a, d - 2);
  c.witness_iso = is_cycle(g.gm) && is_homotopy_iso(g.gm);
  c.mf_dim = graded_cycles(g.Qm, g.Qm).dim;
  return c;
}

}  // namespace mfcft
