#pragma once

// Matrix bifactorisations of x^d - y^d over Q(zeta)[x, y, internal variables],
// their morphisms, Koszul-signed tensor products, unit isomorphisms, rank-one
// duals with evaluation and coevaluation, and the twist functors.
//
// Every object lives in one variable frame: external x (left) and y (right),
// internal variables y1..yk. In M (x) N the right variable of M and the left
// variable of N become y_{m+1}, where m is the number of internal variables of
// M; internal variables of N are shifted past it. Re-bracketing a tensor
// product therefore never renames variables, and associators are permutations.

#include <atomic>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linop.hpp"

namespace mfcft {

namespace detail {
// test hook: flips the Koszul sign in tensor_mf so mutation tests can observe failures
inline std::atomic<bool> koszul_fault{false};
}  // namespace detail

using Leaf = std::vector<std::pair<int, int>>;  // per tensor factor: (degree, index)

struct MatrixBifact {
  Setting st;
  Var left_var = X, right_var = Y;
  int n_int = 0;
  Mat<MPoly> d0, d1;  // d0: M0 -> M1 (rank1 x rank0), d1: M1 -> M0 (rank0 x rank1)
  std::string name;
  std::array<std::vector<Leaf>, 2> leaves;
  // C-degree of each free generator, when the object is graded
  std::optional<std::array<std::vector<Rational>, 2>> charges;

  int d() const { return st.d; }
  int rank(int e) const { return e == 0 ? d0.cols : d0.rows; }
  const Mat<MPoly>& dmat(int e) const { return e == 0 ? d0 : d1; }
  std::vector<Var> int_vars() const {
    std::vector<Var> v;
    for (int i = 1; i <= n_int; ++i) v.push_back(internal_var(i));
    return v;
  }
  std::vector<Var> all_vars() const {
    std::vector<Var> v{X, Y};
    for (Var w : int_vars()) v.push_back(w);
    return v;
  }
  bool graded() const { return charges.has_value(); }
  const Rational& charge(int e, int i) const { return (*charges)[e].at(i); }
};

using Obj = std::shared_ptr<const MatrixBifact>;

inline Obj make_object(const Setting& st, Mat<MPoly> d0, Mat<MPoly> d1, std::string name, int n_int = 0) {
  auto m = std::make_shared<MatrixBifact>();
  m->st = st;
  m->n_int = n_int;
  m->d0 = std::move(d0);
  m->d1 = std::move(d1);
  m->name = std::move(name);
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < m->rank(e); ++i) m->leaves[e].push_back({{e, i}});
  return m;
}

inline Obj with_charges(const Obj& M, std::vector<Rational> q0, std::vector<Rational> q1) {
  auto m = std::make_shared<MatrixBifact>(*M);
  m->charges = std::array<std::vector<Rational>, 2>{std::move(q0), std::move(q1)};
  return m;
}

inline MPoly potential_difference(const MatrixBifact& M) {
  return MPoly::var(X).pow(M.d()) - MPoly::var(Y).pow(M.d());
}

// ---------------------------------------------------------------- labels

struct PermLabel {
  int d = 3;
  std::vector<int> S;  // sorted residues mod d

  static PermLabel of(int d, std::vector<int> s) {
    std::set<int> u;
    for (int j : s) u.insert(((j % d) + d) % d);
    return {d, std::vector<int>(u.begin(), u.end())};
  }
  static PermLabel consecutive(int d, int a, int lambda) {
    if (lambda < 0 || lambda > d - 2) throw OutOfRange("lambda must lie in 0..d-2");
    std::vector<int> s;
    for (int k = 0; k <= lambda; ++k) s.push_back(a + k);
    return of(d, s);
  }
  PermLabel negated() const {
    std::vector<int> s;
    for (int j : S) s.push_back(-j);
    return of(d, s);
  }
  PermLabel shifted(int c) const {
    std::vector<int> s;
    for (int j : S) s.push_back(j + c);
    return of(d, s);
  }
  std::vector<int> complement() const {
    std::vector<int> c;
    for (int j = 0; j < d; ++j)
      if (!std::binary_search(S.begin(), S.end(), j)) c.push_back(j);
    return c;
  }
  bool proper_nonempty() const { return !S.empty() && static_cast<int>(S.size()) < d; }
  std::string str() const {
    std::string s = "{";
    for (size_t i = 0; i < S.size(); ++i) s += (i ? "," : "") + std::to_string(S[i]);
    return s + "}";
  }
  friend bool operator==(const PermLabel& a, const PermLabel& b) { return a.d == b.d && a.S == b.S; }
};

inline Obj perm_mf(const Setting& st, const PermLabel& L) {
  Mat<MPoly> d0(1, 1), d1(1, 1);
  d1(0, 0) = perm_product(st, L.S);
  d0(0, 0) = perm_product(st, L.complement());
  return make_object(st, d0, d1, "P" + L.str());
}
inline Obj perm_mf(const PermLabel& L) { return perm_mf(Setting(L.d), L); }

inline Obj unit_mf(const Setting& st) {
  auto I = std::make_shared<MatrixBifact>(*perm_mf(st, PermLabel::of(st.d, {0})));
  I->name = "I";
  return I;
}

inline bool verify_factorisation(const MatrixBifact& M) {
  MPoly W = potential_difference(M);
  for (int e = 0; e < 2; ++e) {
    const auto& A = M.dmat(e);      // e -> e+1
    const auto& B = M.dmat(1 - e);  // e+1 -> e
    int r = M.rank(e);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        MPoly s;
        for (int k = 0; k < M.rank(1 - e); ++k) s += B(i, k) * A(k, j);
        if (s != (i == j ? W : MPoly())) return false;
      }
  }
  return true;
}

// ---------------------------------------------------------------- frames

// native variables of the left factor into the frame of M (x) N (m = ints of M)
inline Subst embed_left(int m) { return renaming({{Y, internal_var(m + 1)}}); }
// native variables of the right factor into the frame of M (x) N
inline Subst embed_right(int m, int n) {
  std::vector<std::pair<Var, Var>> r{{X, internal_var(m + 1)}};
  for (int j = 1; j <= n; ++j) r.push_back({internal_var(j), internal_var(m + 1 + j)});
  return renaming(r);
}

struct TensorBasis {
  struct Elem {
    int a, i, b, j;
  };
  std::array<std::vector<Elem>, 2> comp;
};

inline TensorBasis tensor_basis(const MatrixBifact& M, const MatrixBifact& N) {
  TensorBasis tb;
  for (int e = 0; e < 2; ++e) {
    int blocks[2][2] = {{0, 0}, {1, 1}};
    if (e == 1) {
      blocks[0][0] = 1, blocks[0][1] = 0;
      blocks[1][0] = 0, blocks[1][1] = 1;
    }
    for (auto& bl : blocks)
      for (int i = 0; i < M.rank(bl[0]); ++i)
        for (int j = 0; j < N.rank(bl[1]); ++j) tb.comp[e].push_back({bl[0], i, bl[1], j});
  }
  return tb;
}

inline Obj tensor_mf(const Obj& Mp, const Obj& Np) {
  const MatrixBifact &M = *Mp, &N = *Np;
  if (M.d() != N.d() || M.st.l != N.st.l) throw VariableMismatch("tensor factors over different settings");
  if (M.right_var != Y || N.left_var != X) throw VariableMismatch("tensor factors must use the canonical frame");
  int m = M.n_int, n = N.n_int;
  if (m + n + 1 > kMaxInternal) throw TooManyInternalVariables("tensor product too deep");
  Subst L = embed_left(m), R = embed_right(m, n);
  TensorBasis tb = tensor_basis(M, N);
  int sign_flip = detail::koszul_fault.load() ? -1 : 1;
  Mat<MPoly> dm[2];
  for (int e = 0; e < 2; ++e) {
    const auto& src = tb.comp[e];
    const auto& tgt = tb.comp[1 - e];
    dm[e] = Mat<MPoly>(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (size_t t = 0; t < tgt.size(); ++t)
      for (size_t s = 0; s < src.size(); ++s) {
        const auto &T = tgt[t], &Sx = src[s];
        MPoly v;
        if (T.b == Sx.b && T.j == Sx.j && T.a != Sx.a) v += substitute(M.dmat(Sx.a)(T.i, Sx.i), L);
        if (T.a == Sx.a && T.i == Sx.i && T.b != Sx.b) {
          MPoly w = substitute(N.dmat(Sx.b)(T.j, Sx.j), R);
          v += (Sx.a == 1 ? w.scaled(CycNum(-sign_flip)) : w);
        }
        dm[e](static_cast<int>(t), static_cast<int>(s)) = v;
      }
  }
  auto out = std::make_shared<MatrixBifact>();
  out->st = M.st;
  out->n_int = m + n + 1;
  out->d0 = dm[0];
  out->d1 = dm[1];
  out->name = "(" + M.name + "*" + N.name + ")";
  for (int e = 0; e < 2; ++e)
    for (auto& el : tb.comp[e]) {
      Leaf lf = M.leaves[el.a][el.i];
      const Leaf& rt = N.leaves[el.b][el.j];
      lf.insert(lf.end(), rt.begin(), rt.end());
      out->leaves[e].push_back(lf);
    }
  if (M.graded() && N.graded()) {
    std::array<std::vector<Rational>, 2> q;
    for (int e = 0; e < 2; ++e)
      for (auto& el : tb.comp[e]) q[e].push_back(M.charge(el.a, el.i) + N.charge(el.b, el.j));
    out->charges = q;
  }
  return out;
}

inline Obj tensor_power(const Obj& T, int k, const Obj& unit) {
  if (k == 0) return unit;
  Obj r = T;
  for (int i = 1; i < k; ++i) r = tensor_mf(r, T);
  return r;
}

inline Obj direct_sum(const Obj& Mp, const Obj& Np) {
  const MatrixBifact &M = *Mp, &N = *Np;
  if (M.n_int != N.n_int) throw VariableMismatch("direct sum of objects in different frames");
  Mat<MPoly> dm[2];
  for (int e = 0; e < 2; ++e) {
    int r = M.rank(1 - e) + N.rank(1 - e), c = M.rank(e) + N.rank(e);
    dm[e] = Mat<MPoly>(r, c);
    for (int i = 0; i < M.rank(1 - e); ++i)
      for (int j = 0; j < M.rank(e); ++j) dm[e](i, j) = M.dmat(e)(i, j);
    for (int i = 0; i < N.rank(1 - e); ++i)
      for (int j = 0; j < N.rank(e); ++j) dm[e](M.rank(1 - e) + i, M.rank(e) + j) = N.dmat(e)(i, j);
  }
  auto out = std::make_shared<MatrixBifact>(*make_object(M.st, dm[0], dm[1], M.name + "+" + N.name, M.n_int));
  if (M.graded() && N.graded()) {
    std::array<std::vector<Rational>, 2> q;
    for (int e = 0; e < 2; ++e) {
      q[e] = (*M.charges)[e];
      for (auto& c : (*N.charges)[e]) q[e].push_back(c);
    }
    out->charges = q;
  }
  return out;
}

// substitution realising the twisted action: x -> eta^a x, y -> eta^-b y
inline Subst twist_subst(const Setting& st, int a, int b) {
  return canonical({{X, MPoly::var(X).scaled(st.eta(a))}, {Y, MPoly::var(Y).scaled(st.eta(-b))}});
}

inline Obj twist_mf(const Obj& Mp, int a, int b) {
  const MatrixBifact& M = *Mp;
  Subst s = twist_subst(M.st, a, b);
  auto out = std::make_shared<MatrixBifact>(M);
  for (auto* mat : {&out->d0, &out->d1})
    for (auto& p : mat->a) p = substitute(p, s);
  out->name = "_" + std::to_string(a) + M.name + "_" + std::to_string(b);
  return out;
}

inline Obj dual_rank1(const Obj& Mp) {
  const MatrixBifact& M = *Mp;
  if (M.rank(0) != 1 || M.rank(1) != 1 || M.n_int) throw RankUnsupported("duals are implemented for rank (1,1)");
  Subst sw = renaming({{X, Y}, {Y, X}});
  auto out = std::make_shared<MatrixBifact>(M);
  out->d1(0, 0) = -substitute(M.d1(0, 0), sw);
  out->d0(0, 0) = substitute(M.d0(0, 0), sw);
  out->name = M.name + "^+";
  if (M.graded()) {
    // the dual grading: generator charges fixed by d having degree one
    Rational a = M.charge(0, 0);
    int deg1 = M.d1(0, 0).degree();
    Rational two_d = frac(2, M.d());
    out->charges = std::array<std::vector<Rational>, 2>{
        std::vector<Rational>{-a + two_d * (1 - deg1)}, std::vector<Rational>{-a - 1 + two_d}};
  }
  return out;
}

// ---------------------------------------------------------------- morphisms

struct MFMorphism {
  Obj src, tgt;
  int deg = 0;
  std::array<Mat<LinOp>, 2> f;  // f[e]: src_e -> tgt_{e+deg}
  std::string name;
};

inline MFMorphism zero_morphism(const Obj& s, const Obj& t, int deg = 0) {
  MFMorphism m{s, t, deg, {}, "0"};
  for (int e = 0; e < 2; ++e) m.f[e] = Mat<LinOp>(t->rank((e + deg) % 2), s->rank(e));
  return m;
}

inline MFMorphism identity(const Obj& M) {
  MFMorphism m = zero_morphism(M, M);
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < M->rank(e); ++i) m.f[e](i, i) = LinOp::mult(MPoly(1));
  m.name = "1";
  return m;
}

inline MFMorphism diag_scalars(const Obj& s, const Obj& t, const CycNum& c0, const CycNum& c1) {
  MFMorphism m = zero_morphism(s, t);
  m.f[0](0, 0) = LinOp::mult(MPoly(c0));
  m.f[1](0, 0) = LinOp::mult(MPoly(c1));
  return m;
}

inline Mat<LinOp> mat_mul(const Mat<LinOp>& A, const Mat<LinOp>& B) {
  if (A.cols != B.rows) throw ShapeMismatch("matrix product");
  Mat<LinOp> C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < B.cols; ++j) {
      LinOp s;
      for (int k = 0; k < A.cols; ++k) s = s + compose(A(i, k), B(k, j));
      C(i, j) = s;
    }
  return C;
}

inline Mat<LinOp> to_ops(const Mat<MPoly>& A) {
  Mat<LinOp> r(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) r.a[i] = LinOp::mult(A.a[i]);
  return r;
}

// g after f
inline MFMorphism compose(const MFMorphism& g, const MFMorphism& f) {
  if (f.tgt->rank(0) != g.src->rank(0) || f.tgt->rank(1) != g.src->rank(1) || f.tgt->n_int != g.src->n_int)
    throw ShapeMismatch("composition of incompatible morphisms " + g.name + " o " + f.name);
  MFMorphism r{f.src, g.tgt, (f.deg + g.deg) % 2, {}, g.name + "o" + f.name};
  for (int e = 0; e < 2; ++e) r.f[e] = mat_mul(g.f[(e + f.deg) % 2], f.f[e]);
  return r;
}

inline MFMorphism compose_chain(std::initializer_list<MFMorphism> fs) {
  // listed in order of application
  auto it = fs.begin();
  MFMorphism r = *it++;
  for (; it != fs.end(); ++it) r = compose(*it, r);
  return r;
}

inline MFMorphism operator+(const MFMorphism& a, const MFMorphism& b) {
  MFMorphism r = a;
  for (int e = 0; e < 2; ++e)
    for (size_t i = 0; i < r.f[e].a.size(); ++i) r.f[e].a[i] = a.f[e].a[i] + b.f[e].a[i];
  r.name = a.name + "+" + b.name;
  return r;
}
inline MFMorphism scaled(const MFMorphism& a, const CycNum& c) {
  MFMorphism r = a;
  for (int e = 0; e < 2; ++e)
    for (auto& op : r.f[e].a) op = op.scaled(c);
  return r;
}
inline MFMorphism operator-(const MFMorphism& a, const MFMorphism& b) { return a + scaled(b, CycNum(-1)); }

inline Mat<LinOp> diff_ops(const MatrixBifact& M, int e) { return to_ops(M.dmat(e)); }

// delta(f) = d^N f - (-1)^|f| f d^M
inline MFMorphism delta(const MFMorphism& f) {
  MFMorphism r{f.src, f.tgt, (f.deg + 1) % 2, {}, "d(" + f.name + ")"};
  CycNum sg(f.deg ? 1 : -1);
  for (int e = 0; e < 2; ++e) {
    Mat<LinOp> a = mat_mul(diff_ops(*f.tgt, (e + f.deg) % 2), f.f[e]);
    Mat<LinOp> b = mat_mul(f.f[(e + 1) % 2], diff_ops(*f.src, e));
    for (size_t i = 0; i < a.a.size(); ++i) a.a[i] = a.a[i] + b.a[i].scaled(sg);
    r.f[e] = a;
  }
  return r;
}

inline int default_probe_bound(const MatrixBifact& M) { return 3 * M.d(); }

// monomials spanning the source as a module over the constants: internal
// monomials up to the bound, times 1, x, y
inline std::vector<MPoly> probes(const MatrixBifact& M, int bound) {
  std::vector<MPoly> out;
  std::vector<Var> iv = M.int_vars();
  std::vector<Mono> ext{Mono{}, Mono::var(X), Mono::var(Y)};
  for (int k = 0; k <= (iv.empty() ? 0 : bound); ++k)
    for (auto& m : monomials_of_degree(iv, k))
      for (auto& e : ext) out.push_back(MPoly::term(m * e, CycNum(1)));
  return out;
}

// zero test for a linear map out of M: exact when structured, on probes otherwise
inline bool op_is_zero(const LinOp& op, const MatrixBifact& M, int bound = -1) {
  if (op.structured()) {
    // distinct substitutions are linearly independent, so only cancellation matters
    std::array<bool, kMaxVars> live{};
    for (Var v : M.all_vars()) live[v] = true;
    return op.restricted(live).terms().empty();
  }
  if (M.n_int == 0) return op.apply(MPoly(1)).is_zero();
  if (bound < 0) bound = default_probe_bound(M);
  for (auto& p : probes(M, bound))
    if (!op.apply(p).is_zero()) return false;
  return true;
}

inline bool is_zero(const MFMorphism& f, int bound = -1) {
  for (int e = 0; e < 2; ++e)
    for (auto& op : f.f[e].a)
      if (!op_is_zero(op, *f.src, bound)) return false;
  return true;
}

inline bool equal(const MFMorphism& a, const MFMorphism& b, int bound = -1) {
  if (a.deg != b.deg) return false;
  return is_zero(a - b, bound);
}

inline bool is_cycle(const MFMorphism& f, int bound = -1) { return is_zero(delta(f), bound); }

// replace every entry by the polynomial it sends 1 to (sources without internal variables)
inline MFMorphism materialise(const MFMorphism& f) {
  if (f.src->n_int) return f;
  MFMorphism r = f;
  for (int e = 0; e < 2; ++e)
    for (auto& op : r.f[e].a) op = LinOp::mult(op.apply(MPoly(1)));
  return r;
}

// [f g] : A + B -> C
inline MFMorphism hstack(const MFMorphism& f, const MFMorphism& g) {
  if (f.deg != g.deg) throw ShapeMismatch("hstack of different degrees");
  Obj s = direct_sum(f.src, g.src);
  MFMorphism r = zero_morphism(s, f.tgt, f.deg);
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < r.f[e].rows; ++i) {
      for (int j = 0; j < f.f[e].cols; ++j) r.f[e](i, j) = f.f[e](i, j);
      for (int j = 0; j < g.f[e].cols; ++j) r.f[e](i, f.f[e].cols + j) = g.f[e](i, j);
    }
  r.name = "[" + f.name + "," + g.name + "]";
  return r;
}

// ---------------------------------------------------------------- tensor of morphisms

inline Subst left_in(int m, int n) {
  std::vector<std::pair<Var, Var>> r{{internal_var(m + 1), Y}, {Y, scratch_var(0)}};
  for (int j = 1; j <= n; ++j) r.push_back({internal_var(m + 1 + j), scratch_var(j)});
  return renaming(r);
}
inline Subst left_out(int m2, int n) {
  std::vector<std::pair<Var, Var>> r{{Y, internal_var(m2 + 1)}, {scratch_var(0), Y}};
  for (int j = 1; j <= n; ++j) r.push_back({scratch_var(j), internal_var(m2 + 1 + j)});
  return renaming(r);
}
inline Subst right_in(int m, int n) {
  std::vector<std::pair<Var, Var>> r{{X, scratch_var(0)}, {internal_var(m + 1), X}};
  for (int i = 1; i <= m; ++i) r.push_back({internal_var(i), scratch_var(i)});
  for (int j = 1; j <= n; ++j) r.push_back({internal_var(m + 1 + j), internal_var(j)});
  return renaming(r);
}
inline Subst right_out(int m, int n2) {
  std::vector<std::pair<Var, Var>> r{{X, internal_var(m + 1)}, {scratch_var(0), X}};
  for (int i = 1; i <= m; ++i) r.push_back({scratch_var(i), internal_var(i)});
  for (int j = 1; j <= n2; ++j) r.push_back({internal_var(j), internal_var(m + 1 + j)});
  return renaming(r);
}

// f (x) g with the Koszul sign (f (x) g)(m (x) n) = (-1)^{|g||m|} f(m) (x) g(n)
inline MFMorphism tensor_mor(const MFMorphism& f, const MFMorphism& g) {
  Obj S = tensor_mf(f.src, g.src), T = tensor_mf(f.tgt, g.tgt);
  int m = f.src->n_int, m2 = f.tgt->n_int, n = g.src->n_int, n2 = g.tgt->n_int;
  Subst gi = right_in(m, n), go = right_out(m, n2);
  Subst fi = left_in(m, n2), fo = left_out(m2, n2);
  TensorBasis sb = tensor_basis(*f.src, *g.src), tb = tensor_basis(*f.tgt, *g.tgt);
  MFMorphism r{S, T, (f.deg + g.deg) % 2, {}, "(" + f.name + "*" + g.name + ")"};
  for (int e = 0; e < 2; ++e) {
    int te = (e + r.deg) % 2;
    const auto& src = sb.comp[e];
    const auto& tgt = tb.comp[te];
    r.f[e] = Mat<LinOp>(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (size_t s = 0; s < src.size(); ++s) {
      const auto& A = src[s];
      int ta = (A.a + f.deg) % 2, tbd = (A.b + g.deg) % 2;
      CycNum sign((g.deg && A.a) ? -1 : 1);
      for (size_t t = 0; t < tgt.size(); ++t) {
        const auto& B = tgt[t];
        if (B.a != ta || B.b != tbd) continue;
        const LinOp& fo_op = f.f[A.a](B.i, A.i);
        const LinOp& go_op = g.f[A.b](B.j, A.j);
        if (fo_op.is_zero_structured() || go_op.is_zero_structured()) continue;
        LinOp op = compose(fo_op.conj(fi, fo), go_op.conj(gi, go));
        r.f[e](static_cast<int>(t), static_cast<int>(s)) = op.scaled(sign);
      }
    }
  }
  return r;
}

// permutation between two bracketings of the same tensor word
inline MFMorphism reassociate(const Obj& from, const Obj& to) {
  if (from->n_int != to->n_int) throw VariableMismatch("reassociation between different frames");
  MFMorphism r = zero_morphism(from, to);
  for (int e = 0; e < 2; ++e) {
    if (from->rank(e) != to->rank(e)) throw ShapeMismatch("reassociation ranks");
    for (int s = 0; s < from->rank(e); ++s) {
      int hit = -1;
      for (int t = 0; t < to->rank(e); ++t)
        if (to->leaves[e][t] == from->leaves[e][s]) hit = t;
      if (hit < 0) throw ShapeMismatch("reassociation leaves");
      r.f[e](hit, s) = LinOp::mult(MPoly(1));
    }
  }
  r.name = "a";
  return r;
}

// conjugate a morphism by the twist (a, b) on both ends
inline MFMorphism twist_mor(const MFMorphism& f, int a, int b) {
  const Setting& st = f.src->st;
  Subst in = canonical({{X, MPoly::var(X).scaled(st.eta(-a))}, {Y, MPoly::var(Y).scaled(st.eta(b))}});
  Subst out = twist_subst(st, a, b);
  MFMorphism r = f;
  r.src = twist_mf(f.src, a, b);
  r.tgt = twist_mf(f.tgt, a, b);
  for (int e = 0; e < 2; ++e)
    for (auto& op : r.f[e].a) op = op.conj(in, out);
  r.name = "_" + std::to_string(a) + "(" + f.name + ")_" + std::to_string(b);
  return r;
}

// ---------------------------------------------------------------- unit isomorphisms

// I (x) M -> M : f(x, y1) m(y1, ...) -> f(x, x) m(x, ...)
inline MFMorphism unit_left(const Obj& I, const Obj& M) {
  Obj S = tensor_mf(I, M);
  int n = M->n_int;
  std::vector<std::pair<Var, Var>> ren{{internal_var(1), X}};
  for (int j = 1; j <= n; ++j) ren.push_back({internal_var(1 + j), internal_var(j)});
  LinOp L = LinOp::subst(renaming(ren));
  MFMorphism r = zero_morphism(S, M);
  int r0 = M->rank(0), r1 = M->rank(1);
  // comp 0 basis: I0 M0 (r0), I1 M1 (r1); comp 1: I1 M0 (r0), I0 M1 (r1)
  for (int j = 0; j < r0; ++j) r.f[0](j, j) = L;
  for (int j = 0; j < r1; ++j) r.f[1](j, r0 + j) = L;
  r.name = "lambda";
  return r;
}

// M (x) I -> M : m(..., w) f(w, y) -> m(..., y) f(y, y)
inline MFMorphism unit_right(const Obj& M, const Obj& I) {
  Obj S = tensor_mf(M, I);
  LinOp R = LinOp::subst(renaming({{internal_var(M->n_int + 1), Y}}));
  MFMorphism r = zero_morphism(S, M);
  // comp 0: M0 I0, M1 I1 ; comp 1: M1 I0, M0 I1
  for (int i = 0; i < M->rank(0); ++i) r.f[0](i, i) = R;
  for (int i = 0; i < M->rank(1); ++i) r.f[1](i, i) = R;
  r.name = "rho";
  return r;
}

inline std::pair<MFMorphism, MFMorphism> unit_isos(const Obj& M) {
  Obj I = unit_mf(M->st);
  return {unit_left(I, M), unit_right(M, I)};
}

// ---------------------------------------------------------------- duals, ev, coev

// the residue functional in (left, mid, right) variables: coefficient of
// mid^-1 in (left - right - mid) d0(mid, right) f / (mid (mid^d - right^d))
inline MPoly g_residue_in(const MatrixBifact& M, const MPoly& f, Var left, Var mid, Var right) {
  int d = M.d();
  MPoly d0 = substitute(M.d0(0, 0), canonical({{X, MPoly::var(mid)}, {Y, MPoly::var(right)}}));
  MPoly g = (MPoly::var(left) - MPoly::var(right) - MPoly::var(mid)) * d0 * f;
  int top = g.degree_in(mid);
  MPoly out;
  for (int m = 0; d * (1 + m) <= top; ++m) out += coeff_of(g, mid, d * (1 + m)) * MPoly::var(right).pow(d * m);
  return out;
}

inline MPoly g_residue(const MatrixBifact& M, const MPoly& f) {
  if (M.rank(0) != 1 || M.rank(1) != 1) throw RankUnsupported();
  return g_residue_in(M, f, X, Y, Z);
}

inline MFMorphism perm_dual_iso(const Setting& st, const PermLabel& S) {
  Obj src = perm_mf(st, S.negated());
  Obj tgt = dual_rank1(perm_mf(st, S));
  CycNum c1 = CycNum(S.S.size() % 2 ? 1 : -1);
  for (int j : S.S) c1 *= st.eta(-j);
  MFMorphism m = diag_scalars(src, tgt, st.one(), c1);
  m.name = "dual_iso" + S.str();
  return m;
}

inline std::pair<MFMorphism, MFMorphism> ev_coev(const Obj& Mp) {
  const MatrixBifact& M = *Mp;
  if (M.rank(0) != 1 || M.rank(1) != 1 || M.n_int) throw RankUnsupported();
  Obj I = unit_mf(M.st);
  Obj Mplus = dual_rank1(Mp);
  const Var w = internal_var(1);
  MPoly x = MPoly::var(X), y = MPoly::var(Y);
  auto Mcopy = std::make_shared<MatrixBifact>(M);

  // ev : M+ (x) M -> I, frame (x, w, y)
  Obj PM = tensor_mf(Mplus, Mp);
  MFMorphism ev = zero_morphism(PM, I);
  LinOp G = LinOp::general([Mcopy, w](const MPoly& f) { return g_residue_in(*Mcopy, f, X, w, Y); });
  MPoly d1_wx = substitute(M.d1(0, 0), renaming({{X, w}, {Y, X}}));
  LinOp B = LinOp::general([Mcopy, w, d1_wx, x, y](const MPoly& f) {
    return exact_div(g_residue_in(*Mcopy, d1_wx * f, X, w, Y), x - y);
  });
  LinOp C = LinOp::subst(canonical({{w, MPoly()}}), MPoly(-1));
  ev.f[0](0, 0) = G.scaled(CycNum(-1));  // A = -G
  ev.f[1](0, 0) = B;
  ev.f[1](0, 1) = C;
  ev.name = "ev";

  // coev : I -> M (x) M+, frame (x, w, y)
  Obj MP = tensor_mf(Mp, Mplus);
  MFMorphism coev = zero_morphism(I, MP);
  auto diffq = [&](const MPoly& p) {
    MPoly a = substitute(p, renaming({{Y, w}}));
    MPoly b = substitute(p, renaming({{X, Y}, {Y, w}}));
    return exact_div(a - b, x - y);
  };
  coev.f[1](0, 0) = LinOp::mult(MPoly(1));
  coev.f[1](1, 0) = LinOp::mult(MPoly(1));
  coev.f[0](0, 0) = LinOp::mult(diffq(M.d1(0, 0)));
  coev.f[0](1, 0) = LinOp::mult(diffq(M.d0(0, 0)));
  coev.name = "coev";
  return {ev, coev};
}

inline PermLabel self_dual_label(int d) { return PermLabel::consecutive(d, (d - 1) / 2, 1); }

struct Duality {
  Obj T, I;
  MFMorphism t, t_inv, ev, coev, u, n;
};

inline Duality duality_un(const Setting& st, const Obj& T_in = nullptr) {
  require_odd(st.d);
  Duality D;
  D.T = T_in ? T_in : perm_mf(st, self_dual_label(st.d));
  D.I = unit_mf(st);
  Obj Tp = dual_rank1(D.T);
  D.t = diag_scalars(D.T, Tp, st.one(), CycNum(-1));
  D.t.name = "t";
  D.t_inv = diag_scalars(Tp, D.T, st.one(), CycNum(-1));
  D.t_inv.name = "t^-1";
  std::tie(D.ev, D.coev) = ev_coev(D.T);
  // the graded versions carry charges on T; ev/coev need only the differentials
  D.ev.src = tensor_mf(Tp, D.T);
  D.coev.tgt = tensor_mf(D.T, Tp);
  D.u = compose(D.ev, tensor_mor(D.t, identity(D.T)));
  D.u.name = "u";
  D.n = compose(tensor_mor(identity(D.T), D.t_inv), D.coev);
  D.n.name = "n";
  return D;
}

// ---------------------------------------------------------------- twists

// s_{a,b}: P_{S-a-b} -> _a(P_S)_b
inline MFMorphism s_iso(const Setting& st, const PermLabel& S, int a, int b) {
  Obj P = perm_mf(st, S);
  Obj src = perm_mf(st, S.shifted(-a - b));
  MFMorphism m = diag_scalars(src, twist_mf(P, a, b), st.one(), st.eta(-static_cast<long>(S.S.size()) * a));
  m.name = "s";
  return m;
}

inline Obj chi(const Setting& st, int a) { return twist_mf(unit_mf(st), a, 0); }

// mu_{a,b}: chi(a) (x) chi(b) -> chi(a+b), the left twist of the left unitor
inline MFMorphism chi_mu(const Setting& st, int a, int b) {
  Obj A = chi(st, a), B = chi(st, b);
  Obj S = tensor_mf(A, B);
  Obj T = chi(st, a + b);
  LinOp L = LinOp::subst(canonical({{internal_var(1), MPoly::var(X).scaled(st.eta(a))}}));
  MFMorphism r = zero_morphism(S, T);
  r.f[0](0, 0) = L;
  r.f[1](0, 1) = L;
  r.name = "mu";
  return r;
}

}  // namespace mfcft
