#pragma once

// CFT-side labels and data: conformal weights, locality, induction to free
// modules, su(2) fusion at level d-2, the NS-sector fusion ring, quantum
// dimensions and quadratic forms.

#include <set>

#include "graded.hpp"

namespace mfcft {

inline int mod(int a, int m) { return ((a % m) + m) % m; }

struct SimpleE {
  int l = 0, r = 0, s = 0;
  friend bool operator<(const SimpleE& a, const SimpleE& b) { return std::tie(a.l, a.r, a.s) < std::tie(b.l, b.r, b.s); }
  friend bool operator==(const SimpleE& a, const SimpleE& b) { return a.l == b.l && a.r == b.r && a.s == b.s; }
  std::string str() const {
    return "[" + std::to_string(l) + "," + std::to_string(r) + "," + std::to_string(s) + "]";
  }
};

struct NSLabel {
  int l = 0, r = 0;
  friend bool operator<(const NSLabel& a, const NSLabel& b) { return std::tie(a.l, a.r) < std::tie(b.l, b.r); }
  friend bool operator==(const NSLabel& a, const NSLabel& b) { return a.l == b.l && a.r == b.r; }
  std::string str() const { return "[" + std::to_string(l) + "," + std::to_string(r) + "]"; }
};

inline SimpleE simple_e(int d, int l, int r, int s) {
  if (l < 0 || l > d - 2) throw OutOfRange("l must lie in 0..d-2");
  return {l, mod(r, 2 * d), mod(s, 4)};
}

inline NSLabel ns_label(int d, int l, int r) {
  if (l < 0 || l > d - 2) throw OutOfRange("l must lie in 0..d-2");
  if (mod(l + r, 2)) throw ParityViolation("l + r must be even");
  return {l, mod(r, 2 * d)};
}

inline Rational h_weight(int d, int l, int r, int s) {
  Rational h = frac(l * (l + 2), 4 * d) + frac(s * s, 8) - frac(r * r, 4 * d);
  return mod1(h);
}
inline Rational h_weight(int d, const SimpleE& A) { return h_weight(d, A.l, A.r, A.s); }

inline std::vector<int> su2_fuse(int d, int l, int lp) {
  if (l < 0 || l > d - 2 || lp < 0 || lp > d - 2) throw OutOfRange("su(2) labels must lie in 0..d-2");
  std::vector<int> r;
  for (int m = std::abs(l - lp); m <= std::min(l + lp, 2 * d - 4 - l - lp); m += 2) r.push_back(m);
  return r;
}

inline bool is_local(int l, int r, int s) { return mod(l + r + s, 2) == 0; }

inline std::pair<SimpleE, SimpleE> induce(int d, const SimpleE& A) {
  return {simple_e(d, A.l, A.r, A.s), simple_e(d, d - 2 - A.l, A.r + d, A.s + 2)};
}

// the s = 0 representative of a free module with even s
inline NSLabel normalise(int d, const SimpleE& A) {
  if (A.s % 2) throw ParityViolation("odd s is outside the NS sector");
  if (A.s == 0) return ns_label(d, A.l, A.r);
  return ns_label(d, d - 2 - A.l, A.r + d);
}

inline std::vector<NSLabel> ns_simples(int d) {
  require_odd(d);
  std::vector<NSLabel> out;
  for (int l = 0; l <= d - 2; ++l)
    for (int r = 0; r < 2 * d; ++r)
      if ((l + r) % 2 == 0) out.push_back({l, r});
  return out;
}

inline std::vector<NSLabel> ns_fuse(int d, const NSLabel& A, const NSLabel& B) {
  std::vector<NSLabel> out;
  for (int m : su2_fuse(d, A.l, B.l)) out.push_back(ns_label(d, m, A.r + B.r));
  std::sort(out.begin(), out.end());
  return out;
}

inline CycNum quantum_dim(const Setting& st, int l) {
  if (l < 0 || l > st.d - 2) throw OutOfRange("l must lie in 0..d-2");
  return st.qint(l + 1);
}

// h_C - h_A - h_B is an integer for every C in A (x) B, fused componentwise
inline bool twist_additive(int d, const SimpleE& A, const SimpleE& B) {
  Rational hA = h_weight(d, A), hB = h_weight(d, B);
  for (int m : su2_fuse(d, A.l, B.l)) {
    Rational diff = h_weight(d, m, A.r + B.r, A.s + B.s) - hA - hB;
    if (diff.get_den() != 1) return false;
  }
  return true;
}

inline Rational qform(int m, int r) {
  if (m % 2) throw OddModulus("quadratic form needs an even modulus");
  return mod1(frac(static_cast<long>(r) * r, 2 * m));
}

inline FusionRing cft_fusion_ring(int d) {
  auto L = ns_simples(d);
  int n = static_cast<int>(L.size());
  std::map<NSLabel, int> idx;
  FusionRing R;
  for (int i = 0; i < n; ++i) {
    idx[L[i]] = i;
    R.labels.push_back(L[i].str());
  }
  R.unit = idx.at({0, 0});
  R.N.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& c : ns_fuse(d, L[i], L[j])) R.N[i][j][idx.at(c)] += 1;
  return R;
}

// factorisation into the subring generated by [1,d] and the invertibles generated by [0,2]
struct CftFactorisation {
  bool invertible_order_d = false;
  int t_part_size = 0;
  bool unique_products = false;
  bool generated = false;
  bool ok() const { return invertible_order_d && unique_products && generated; }
};

inline CftFactorisation cft_factorisation(int d) {
  CftFactorisation f;
  NSLabel unit{0, 0}, g{0, 2}, t{1, mod(d, 2 * d)};
  std::vector<NSLabel> zpart{unit};
  NSLabel cur = unit;
  for (int k = 1; k <= d; ++k) {
    auto p = ns_fuse(d, cur, g);
    if (p.size() != 1) return f;
    cur = p[0];
    if (k < d) {
      if (cur == unit) return f;
      zpart.push_back(cur);
    }
  }
  f.invertible_order_d = cur == unit;
  // closure of {unit} under fusion with [1,d]
  std::set<NSLabel> tpart{unit};
  for (bool grew = true; grew;) {
    grew = false;
    for (auto x : std::vector<NSLabel>(tpart.begin(), tpart.end()))
      for (auto& c : ns_fuse(d, x, t)) grew |= tpart.insert(c).second;
  }
  f.t_part_size = static_cast<int>(tpart.size());
  std::set<NSLabel> prods;
  bool single = true;
  for (auto& x : tpart)
    for (auto& z : zpart) {
      auto p = ns_fuse(d, x, z);
      single &= p.size() == 1;
      if (!p.empty()) prods.insert(p[0]);
    }
  auto all = ns_simples(d);
  f.unique_products = single && prods.size() == tpart.size() * zpart.size();
  f.generated = prods.size() == all.size();
  return f;
}

}  // namespace mfcft
