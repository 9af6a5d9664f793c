#pragma once

// C-graded permutation bifactorisations, graded morphism spaces, the
// embeddings g-/g+ of the summands of P(a:1) (x) P(b:mu), and the graded
// fusion ring.

#include <map>
#include <mutex>
#include <tuple>

#include "invariants.hpp"

namespace mfcft {

struct GradedLabel {
  int a = 0, lambda = 0;
  friend bool operator<(const GradedLabel& p, const GradedLabel& q) {
    return std::tie(p.lambda, p.a) < std::tie(q.lambda, q.a);
  }
  friend bool operator==(const GradedLabel& p, const GradedLabel& q) { return p.a == q.a && p.lambda == q.lambda; }
  std::string str() const { return std::to_string(a) + ":" + std::to_string(lambda); }
};

inline GradedLabel normal_label(int d, int a, int lambda) { return {((a % d) + d) % d, lambda}; }

inline Obj hat_p(const Setting& st, const PermLabel& S) {
  Obj P = perm_mf(st, S);
  int n = static_cast<int>(S.S.size());
  Rational c0 = frac(1 - n, st.d);
  Rational c1 = c0 + frac(2 * n, st.d) - 1;
  c0.canonicalize();
  c1.canonicalize();
  auto m = std::make_shared<MatrixBifact>(*with_charges(P, {c0}, {c1}));
  m->name = "^" + P->name;
  return m;
}

inline Obj hat_p(const Setting& st, int a, int lambda) {
  if (lambda == st.d - 1) return hat_p(st, PermLabel::of(st.d, [&] {
                                         std::vector<int> s;
                                         for (int k = 0; k < st.d; ++k) s.push_back(k);
                                         return s;
                                       }()));
  return hat_p(st, PermLabel::consecutive(st.d, a, lambda));
}

inline Obj graded_unit(const Setting& st) {
  auto I = std::make_shared<MatrixBifact>(*hat_p(st, PermLabel::of(st.d, {0})));
  I->name = "I";
  return I;
}

// every non-zero differential entry raises the charge by exactly one
inline bool graded_check(const MatrixBifact& M) {
  if (!M.graded()) return false;
  Rational two_d = frac(2, M.d());
  for (int e = 0; e < 2; ++e) {
    const auto& A = M.dmat(e);
    for (int t = 0; t < A.rows; ++t)
      for (int s = 0; s < A.cols; ++s) {
        const MPoly& p = A(t, s);
        if (p.is_zero()) continue;
        if (!p.is_homogeneous()) return false;
        if (M.charge(1 - e, t) + two_d * p.degree() != M.charge(e, s) + 1) return false;
      }
  }
  return true;
}

// C-degree of a morphism whose entries are homogeneous; nullopt when inconsistent
inline std::optional<Rational> morphism_cdegree(const MFMorphism& f) {
  std::optional<Rational> deg;
  Rational two_d = frac(2, f.src->d());
  for (int e = 0; e < 2; ++e) {
    int te = (e + f.deg) % 2;
    for (int t = 0; t < f.f[e].rows; ++t)
      for (int s = 0; s < f.f[e].cols; ++s) {
        MPoly p = f.f[e](t, s).apply(MPoly(1));
        if (p.is_zero()) continue;
        if (!p.is_homogeneous()) return std::nullopt;
        Rational c = f.tgt->charge(te, t) + two_d * p.degree() - f.src->charge(e, s);
        if (deg && *deg != c) return std::nullopt;
        deg = c;
      }
  }
  return deg ? deg : std::optional<Rational>(Rational(0));
}

inline int graded_hom_dim(const Setting& st, const PermLabel& R, const PermLabel& S) {
  return graded_cycles(hat_p(st, R), hat_p(st, S)).dim;
}

// ---------------------------------------------------------------- g-/g+

struct GPair {
  Obj A, B, AB, Qm, Qp;
  MFMorphism gm, gp;
  CycNum beta_m, beta_p;
};

inline GPair g_pair(const Setting& st, int a, int b, int mu) {
  require_odd(st.d);
  int d = st.d;
  if (mu < 1 || mu > d - 2) throw OutOfRange("mu must lie in 1..d-2");
  const Var w = internal_var(1);
  MPoly x = MPoly::var(X), y = MPoly::var(w), z = MPoly::var(Y);
  auto lin = [&](int j, const MPoly& u, const MPoly& v) { return u - v.scaled(st.eta(j)); };
  MPoly p1 = lin(a, x, y) * lin(a + 1, x, y);
  MPoly pmu(1), qm(1), qp(1);
  for (int j = b; j <= b + mu; ++j) pmu *= lin(j, y, z);
  for (int j = a + b + 1; j <= a + b + mu; ++j) qm *= lin(j, x, z);
  for (int j = a + b; j <= a + b + mu + 1; ++j) qp *= lin(j, x, z);
  MPoly xd = x.pow(d), yd = y.pow(d), zd = z.pow(d);

  auto div = [](const MPoly& f, const MPoly& g) {
    try {
      return exact_div(f, g);
    } catch (const NotDivisible&) {
      throw NotPolynomial("g-pair entry is not a polynomial");
    }
  };
  CycNum one = st.one();
  CycNum e1 = one - st.eta(-1);
  CycNum beta_m = st.eta(-a * mu) * (one - st.eta(-mu - 1)) / e1;
  MPoly gm00 = (x.scaled(-(st.eta(-a - 1) * (one - st.eta(-mu)) / e1)) +
                y.scaled((one - st.eta(-mu - 1)) / e1) - z.scaled(st.eta(b)))
                   .scaled(st.eta(-a * mu));
  MPoly gm01(1);
  MPoly gm10 = div(qm * gm00 - pmu * gm01, p1);
  MPoly gm11 = div(div(xd - zd, qm) - div(yd - zd, pmu) * gm00, p1);

  CycNum f1 = one - st.eta(1);
  CycNum beta_p = -(st.eta(a * (mu + 1)) * st.eta(a + 1) * (one - st.eta(mu + 1)) / f1);
  MPoly gp00(1);
  MPoly gp01 = (x.scaled((one - st.eta(mu + 2)) / f1) - y.scaled(st.eta(a + 1) * (one - st.eta(mu + 1)) / f1) -
                z.scaled(st.eta(a + b + mu + 1)))
                   .scaled(st.eta(a * (mu + 1)));
  MPoly gp10 = div(qp - pmu * gp01, p1);
  MPoly gp11 = div(div(xd - zd, qp) * gp01 - div(yd - zd, pmu), p1);

  GPair g;
  g.A = hat_p(st, a, 1);
  g.B = hat_p(st, b, mu);
  g.AB = tensor_mf(g.A, g.B);
  g.Qm = hat_p(st, a + b + 1, mu - 1);
  g.Qp = hat_p(st, a + b, mu + 1);
  g.beta_m = beta_m;
  g.beta_p = beta_p;
  auto build = [&](const Obj& Q, const MPoly& g00, const MPoly& g11, const MPoly& g10, const MPoly& g01,
                   const char* name) {
    MFMorphism m = zero_morphism(Q, g.AB);
    // comp 0 basis: A0B0, A1B1 ; comp 1: A1B0, A0B1
    m.f[0](0, 0) = LinOp::mult(g00);
    m.f[0](1, 0) = LinOp::mult(g11);
    m.f[1](0, 0) = LinOp::mult(g10);
    m.f[1](1, 0) = LinOp::mult(g01);
    m.name = name;
    return m;
  };
  g.gm = build(g.Qm, gm00, gm11, gm10, gm01, "g-");
  g.gp = build(g.Qp, gp00, gp11, gp10, gp01, "g+");
  return g;
}

// ---------------------------------------------------------------- decompositions

struct Decomposition {
  GradedLabel left, right;
  std::vector<GradedLabel> summands;  // zero objects omitted
  bool certified = false;             // homology-certified witness isomorphism
  std::string method;
};

// a degree-0 graded cycle Q -> target inducing an isomorphism on homology
inline std::optional<MFMorphism> find_graded_iso(const Obj& Q, const Obj& target) {
  CycleSpace cs = graded_cycles(Q, target);
  for (auto& f : cs.basis)
    if (is_homotopy_iso(f)) return f;
  return std::nullopt;
}

inline bool is_zero_label(int d, const GradedLabel& L) { return L.lambda == d - 1; }

// summands of P(a:lambda) (x) P(b:mu) for lambda <= 1, with homology certificate
inline Decomposition decompose_basic(const Setting& st, int a, int lambda, int b, int mu, bool certify = true) {
  int d = st.d;
  Decomposition D{normal_label(d, a, lambda), normal_label(d, b, mu), {}, false, ""};
  if (lambda == 0 || mu == 0) {
    D.summands.push_back(normal_label(d, a + b, lambda + mu));
    D.method = "invertible factor";
    if (certify) {
      Obj AB = tensor_mf(hat_p(st, a, lambda), hat_p(st, b, mu));
      D.certified = find_graded_iso(hat_p(st, a + b, lambda + mu), AB).has_value();
    }
    return D;
  }
  if (lambda != 1) throw OutOfRange("basic decomposition needs lambda <= 1");
  D.summands.push_back(normal_label(d, a + b + 1, mu - 1));
  if (mu + 1 <= d - 2) D.summands.push_back(normal_label(d, a + b, mu + 1));
  D.method = "g-pair";
  if (certify) {
    GPair g = g_pair(st, a, b, mu);
    D.certified = is_cycle(g.gm) && is_cycle(g.gp) && is_homotopy_iso(hstack(g.gm, g.gp));
  }
  return D;
}

// ---------------------------------------------------------------- fusion rings

struct FusionRing {
  std::vector<std::string> labels;
  int unit = 0;
  std::vector<std::vector<std::vector<int>>> N;  // N[i][j][k]

  int size() const { return static_cast<int>(labels.size()); }
  int index(const std::string& s) const {
    for (int i = 0; i < size(); ++i)
      if (labels[i] == s) return i;
    return -1;
  }
  bool unit_ok() const {
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (N[unit][i][j] != (i == j) || N[i][unit][j] != (i == j)) return false;
    return true;
  }
  bool commutative() const {
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (N[i][j] != N[j][i]) return false;
    return true;
  }
  bool associative() const {
    int n = size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            long lhs = 0, rhs = 0;
            for (int m = 0; m < n; ++m) {
              lhs += static_cast<long>(N[i][j][m]) * N[m][k][l];
              rhs += static_cast<long>(N[j][k][m]) * N[i][m][l];
            }
            if (lhs != rhs) return false;
          }
    return true;
  }
  // the label j with N(i, j, unit) = 1, if unique
  std::optional<int> dual(int i) const {
    std::optional<int> r;
    for (int j = 0; j < size(); ++j)
      if (N[i][j][unit] == 1) {
        if (r) return std::nullopt;
        r = j;
      } else if (N[i][j][unit] != 0) {
        return std::nullopt;
      }
    return r;
  }
  bool rigid() const {
    for (int i = 0; i < size(); ++i)
      if (!dual(i)) return false;
    return true;
  }
};

using GClass = std::map<GradedLabel, int>;

// Grothendieck-ring products generated by the lambda <= 1 rules
class GradedProducts {
 public:
  explicit GradedProducts(int d) : d_(d) {}

  GClass product(const GradedLabel& X, const GradedLabel& Y) {
    auto key = std::make_pair(X, Y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    GClass r;
    if (X.lambda <= 1 || Y.lambda == 0) {
      for (auto& s : basic(X, Y)) r[s] += 1;
    } else {
      // [a:l] = [0:1][a:l-1] - [a+1:l-2]
      GClass first = product(normal_label(d_, X.a, X.lambda - 1), Y);
      for (auto& [L, n] : first)
        for (auto& s : basic({0, 1}, L)) r[s] += n;
      GClass second = product(normal_label(d_, X.a + 1, X.lambda - 2), Y);
      for (auto& [L, n] : second) r[L] -= n;
      for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    }
    memo_[key] = r;
    return r;
  }

 private:
  std::vector<GradedLabel> basic(const GradedLabel& X, const GradedLabel& Y) const {
    if (X.lambda == 0 || Y.lambda == 0) {
      GradedLabel s = normal_label(d_, X.a + Y.a, X.lambda + Y.lambda);
      return is_zero_label(d_, s) ? std::vector<GradedLabel>{} : std::vector<GradedLabel>{s};
    }
    if (X.lambda != 1) throw OutOfRange("basic rule needs lambda <= 1");
    std::vector<GradedLabel> r{normal_label(d_, X.a + Y.a + 1, Y.lambda - 1)};
    if (Y.lambda + 1 <= d_ - 2) r.push_back(normal_label(d_, X.a + Y.a, Y.lambda + 1));
    return r;
  }
  int d_;
  std::map<std::pair<GradedLabel, GradedLabel>, GClass> memo_;
};

inline std::vector<GradedLabel> graded_labels(int d) {
  std::vector<GradedLabel> r;
  for (int l = 0; l <= d - 2; ++l)
    for (int a = 0; a < d; ++a) r.push_back({a, l});
  return r;
}

// closed-form summand index c = a + b + sign * (lambda + mu - nu) / 2
inline GClass index_formula_product(int d, const GradedLabel& X, const GradedLabel& Y, int sign) {
  GClass r;
  int lo = std::abs(X.lambda - Y.lambda), hi = std::min(X.lambda + Y.lambda, 2 * d - 4 - X.lambda - Y.lambda);
  for (int nu = lo; nu <= hi; nu += 2) r[normal_label(d, X.a + Y.a + sign * (X.lambda + Y.lambda - nu) / 2, nu)] += 1;
  return r;
}

inline FusionRing ring_from(int d, const std::function<GClass(const GradedLabel&, const GradedLabel&)>& prod) {
  FusionRing R;
  auto L = graded_labels(d);
  int n = static_cast<int>(L.size());
  std::map<GradedLabel, int> idx;
  for (int i = 0; i < n; ++i) {
    idx[L[i]] = i;
    R.labels.push_back(L[i].str());
  }
  R.unit = idx[{0, 0}];
  R.N.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& [s, m] : prod(L[i], L[j])) R.N[i][j][idx.at(s)] = m;
  return R;
}

inline FusionRing mf_fusion_ring(int d) {
  require_odd(d);
  GradedProducts P(d);
  return ring_from(d, [&](const GradedLabel& a, const GradedLabel& b) { return P.product(a, b); });
}

inline FusionRing index_formula_ring(int d, int sign) {
  return ring_from(d, [&](const GradedLabel& a, const GradedLabel& b) { return index_formula_product(d, a, b, sign); });
}

inline std::vector<GradedLabel> decompose_product(int d, int a, int lambda, int b, int mu) {
  if (lambda < 0 || lambda > d - 2 || mu < 0 || mu > d - 2) throw OutOfRange("lambda and mu must lie in 0..d-2");
  GradedProducts P(d);
  std::vector<GradedLabel> r;
  for (auto& [L, n] : P.product(normal_label(d, a, lambda), normal_label(d, b, mu)))
    for (int k = 0; k < n; ++k) r.push_back(L);
  return r;
}

}  // namespace mfcft
