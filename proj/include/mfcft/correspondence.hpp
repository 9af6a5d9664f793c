#pragma once

// Z_d-equivariant structures on the bifactorisation side, equivariance of the
// duality maps, the label dictionary, and the comparison of the two fusion rings.

#include "cftside.hpp"
#include "temperleylieb.hpp"

namespace mfcft {

// tau_{S;a} : P_S -> _a(P_S)_-a
inline MFMorphism tau(const Setting& st, const PermLabel& S, int a) {
  int n = static_cast<int>(S.S.size());
  MFMorphism s = s_iso(st, S, a, -a);
  CycNum c = st.eta(static_cast<long>((st.d + 1) / 2) * a * (n - 1));
  MFMorphism r = scaled(s, c);
  r.name = "tau" + S.str() + "_" + std::to_string(a);
  return r;
}

// _aX_-a (x) _aY_-a -> _a(X (x) Y)_-a : rescale the internal variables
inline MFMorphism twist_tensor_iso(const Obj& Xo, const Obj& Yo, int a) {
  const Setting& st = Xo->st;
  Obj src = tensor_mf(twist_mf(Xo, a, -a), twist_mf(Yo, a, -a));
  Obj tgt = twist_mf(tensor_mf(Xo, Yo), a, -a);
  Subst s;
  for (int i = 1; i <= src->n_int; ++i) s.push_back({internal_var(i), MPoly::var(internal_var(i)).scaled(st.eta(-a))});
  LinOp op = LinOp::subst(s);
  MFMorphism r = zero_morphism(src, tgt);
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < src->rank(e); ++i) r.f[e](i, i) = op;
  r.name = "J";
  return r;
}

struct EquivStructure {
  Obj obj;
  std::function<MFMorphism(int)> at;
};

inline EquivStructure perm_structure(const Setting& st, const PermLabel& S, Obj obj = nullptr) {
  return {obj ? obj : perm_mf(st, S), [st, S](int a) { return tau(st, S, a); }};
}

inline EquivStructure tensor_structure(const EquivStructure& X, const EquivStructure& Y) {
  Obj xo = X.obj, yo = Y.obj;
  auto fx = X.at, fy = Y.at;
  return {tensor_mf(xo, yo), [xo, yo, fx, fy](int a) {
            return compose(twist_tensor_iso(xo, yo, a), tensor_mor(fx(a), fy(a)));
          }};
}

inline bool check_cocycle(const EquivStructure& E, int d) {
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (!equal(compose(twist_mor(E.at(b), a, -a), E.at(a)), E.at(a + b))) return false;
  return true;
}

// _a(f)_-a o x_a = y_a o f for every a
inline bool check_equivariant(const MFMorphism& f, const EquivStructure& Es, const EquivStructure& Et, int d) {
  for (int a = 0; a < d; ++a)
    if (!equal(compose(twist_mor(f, a, -a), Es.at(a)), compose(Et.at(a), f))) return false;
  return true;
}

struct DualityEquivariance {
  bool u = false, n = false;
};

inline DualityEquivariance duality_equivariance(const Setting& st, const Duality& D) {
  PermLabel Ts = self_dual_label(st.d);
  EquivStructure ET = perm_structure(st, Ts, D.T);
  EquivStructure EI = perm_structure(st, PermLabel::of(st.d, {0}), D.I);
  EquivStructure ETT = tensor_structure(ET, ET);
  return {check_equivariant(D.u, ETT, EI, st.d), check_equivariant(D.n, EI, ETT, st.d)};
}

// coev of P_S followed by the identification (P_S)^+ = P_-S
inline bool coev_equivariant(const Setting& st, const PermLabel& S) {
  Obj P = perm_mf(st, S);
  auto [ev, coev] = ev_coev(P);
  MFMorphism iso = perm_dual_iso(st, S);  // P_-S -> (P_S)^+
  auto coeff = [&](int e) { return iso.f[e](0, 0).mult_coeff().leading().second; };
  MFMorphism inv = diag_scalars(iso.tgt, iso.src, coeff(0).inverse(), coeff(1).inverse());
  MFMorphism c = compose(tensor_mor(identity(P), inv), coev);
  EquivStructure EI = perm_structure(st, PermLabel::of(st.d, {0}), c.src);
  EquivStructure EP = tensor_structure(perm_structure(st, S, P), perm_structure(st, S.negated()));
  return check_equivariant(c, EI, EP, st.d);
}

// mu_{a,b+c} o (1 (x) mu_{b,c}) = mu_{a+b,c} o (mu_{a,b} (x) 1) o assoc
inline bool mu_hexagon(const Setting& st, int a, int b, int c) {
  Obj A = chi(st, a), B = chi(st, b), C = chi(st, c);
  MFMorphism lhs = compose(chi_mu(st, a, b + c), tensor_mor(identity(A), chi_mu(st, b, c)));
  MFMorphism right = compose(chi_mu(st, a + b, c), tensor_mor(chi_mu(st, a, b), identity(C)));
  MFMorphism rhs = compose(right, reassociate(lhs.src, right.src));
  return equal(lhs, rhs);
}

// chi(a) = P_{-a} via s_{a,0}, certified on homology
inline bool chi_certified(const Setting& st, int a) {
  MFMorphism s = s_iso(st, PermLabel::of(st.d, {0}), a, 0);
  return is_cycle(s) && is_homotopy_iso(s);
}

// ---------------------------------------------------------------- labels

inline GradedLabel label_map(int d, int l, int r) {
  if (mod(l + r, 2)) throw ParityViolation("l + r must be even");
  if (l < 0 || l > d - 2) throw OutOfRange("l must lie in 0..d-2");
  return normal_label(d, (r - l) / 2, l);
}
inline GradedLabel label_map(int d, const NSLabel& L) { return label_map(d, L.l, L.r); }

inline GradedLabel graded_dual(int d, const GradedLabel& L) { return normal_label(d, -L.a - L.lambda, L.lambda); }

struct EquivalenceReport {
  int d = 0;
  bool bijective = false;
  int products = 0, mismatches = 0;
  bool unit = false, duality = false;
  bool pf_dims = false, dim_character = false;
  std::vector<std::string> mismatch_samples;
  bool ok() const { return bijective && mismatches == 0 && unit && duality && pf_dims && dim_character; }
};

// dims give a ring character: d(i) d(j) = sum_k N_ij^k d(k)
inline bool is_dimension_character(const FusionRing& R, const std::vector<CycNum>& dims) {
  for (int i = 0; i < R.size(); ++i)
    for (int j = 0; j < R.size(); ++j) {
      CycNum s;
      for (int k = 0; k < R.size(); ++k)
        if (R.N[i][j][k]) s += dims[k] * CycNum(R.N[i][j][k]);
      if (!(s == dims[i] * dims[j])) return false;
    }
  return true;
}

inline EquivalenceReport verify_equivalence(const Setting& st) {
  int d = st.d;
  require_odd(d);
  EquivalenceReport rep;
  rep.d = d;
  auto ns = ns_simples(d);
  auto gl = graded_labels(d);
  std::map<GradedLabel, NSLabel> back;
  for (auto& L : ns) back[label_map(d, L)] = L;
  rep.bijective = back.size() == ns.size() && back.size() == gl.size();

  GradedProducts P(d);
  for (auto& A : ns)
    for (auto& B : ns) {
      ++rep.products;
      GClass cft;
      for (auto& c : ns_fuse(d, A, B)) cft[label_map(d, c)] += 1;
      GClass mf = P.product(label_map(d, A), label_map(d, B));
      if (cft != mf) {
        ++rep.mismatches;
        if (rep.mismatch_samples.size() < 5) rep.mismatch_samples.push_back(A.str() + "*" + B.str());
      }
    }
  rep.unit = label_map(d, 0, 0) == GradedLabel{0, 0};
  rep.duality = true;
  for (auto& L : ns) rep.duality &= label_map(d, L.l, mod(-L.r, 2 * d)) == graded_dual(d, label_map(d, L));

  // dims on the MF ring transported from the CFT labels
  FusionRing R = mf_fusion_ring(d);
  auto dims_for = [&](const Setting& s) {
    std::vector<CycNum> v;
    for (auto& g : gl) v.push_back(quantum_dim(s, g.lambda));
    return v;
  };
  Setting standard(d, 1);
  auto pf = dims_for(standard);
  bool positive = true;
  for (auto& x : pf) positive &= to_float(x).real() > 0;
  rep.pf_dims = positive && is_dimension_character(R, pf);
  rep.dim_character = is_dimension_character(R, dims_for(st));
  return rep;
}

}  // namespace mfcft
