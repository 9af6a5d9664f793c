#pragma once

// Homology of the reduction modulo the external variables, induced maps,
// and exact linear solving for homotopies and cycle spaces.

#include <map>
#include <optional>
#include <vector>

#include "mfcore.hpp"

namespace mfcft {

// ---------------------------------------------------------------- univariate polynomials

struct UPoly {
  std::vector<CycNum> c;  // low degree first, no trailing zeros

  UPoly() = default;
  UPoly(const CycNum& a) {
    if (!a.is_zero()) c.push_back(a);
  }
  static UPoly monomial(int k, const CycNum& a) {
    UPoly p;
    if (a.is_zero()) return p;
    p.c.assign(k + 1, CycNum());
    p.c[k] = a;
    return p;
  }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const CycNum& lc() const { return c.back(); }
  CycNum at(int k) const { return k < static_cast<int>(c.size()) ? c[k] : CycNum(); }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(static_cast<int>(i)) + b.at(static_cast<int>(i));
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& v : r.c) v = -v;
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, CycNum());
    for (size_t i = 0; i < a.c.size(); ++i)
      if (!a.c[i].is_zero())
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return (a - b).is_zero(); }
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw DivisionByZero("univariate division");
    r = a;
    q = UPoly();
    CycNum inv = b.lc().inverse();
    while (!r.is_zero() && r.deg() >= b.deg()) {
      int k = r.deg() - b.deg();
      CycNum t = r.lc() * inv;
      UPoly m = monomial(k, t);
      q = q + m;
      r = r - m * b;
    }
  }
  UPoly mod(const UPoly& b) const {
    UPoly q, r;
    divmod(*this, b, q, r);
    return r;
  }
};

using UMat = std::vector<std::vector<UPoly>>;

inline UMat identity_umat(int n) {
  UMat m(n, std::vector<UPoly>(n));
  for (int i = 0; i < n; ++i) m[i][i] = UPoly(CycNum(1));
  return m;
}

inline UMat umat_mul(const UMat& A, const UMat& B, int inner) {
  int r = static_cast<int>(A.size());
  int c = B.empty() ? 0 : static_cast<int>(B[0].size());
  UMat C(r, std::vector<UPoly>(c));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      for (int k = 0; k < inner; ++k) C[i][j] = C[i][j] + A[i][k] * B[k][j];
  return C;
}

struct SmithForm {
  UMat S, Sinv, D, T, Tinv;  // S * A * T = D
  int rank = 0;
  std::vector<UPoly> diag;
};

// Smith normal form over F[w]
inline SmithForm smith_normal_form(const UMat& A, int rows, int cols) {
  SmithForm sf;
  sf.D = A;
  sf.S = identity_umat(rows);
  sf.Sinv = identity_umat(rows);
  sf.T = identity_umat(cols);
  sf.Tinv = identity_umat(cols);
  auto& D = sf.D;
  auto row_add = [&](int i, int j, const UPoly& c) {  // row_i += c row_j
    for (int k = 0; k < cols; ++k) D[i][k] = D[i][k] + c * D[j][k];
    for (int k = 0; k < rows; ++k) sf.S[i][k] = sf.S[i][k] + c * sf.S[j][k];
    for (int k = 0; k < rows; ++k) sf.Sinv[k][j] = sf.Sinv[k][j] - c * sf.Sinv[k][i];
  };
  auto row_swap = [&](int i, int j) {
    if (i == j) return;
    std::swap(D[i], D[j]);
    std::swap(sf.S[i], sf.S[j]);
    for (int k = 0; k < rows; ++k) std::swap(sf.Sinv[k][i], sf.Sinv[k][j]);
  };
  auto row_scale = [&](int i, const CycNum& u) {
    UPoly uu(u), ui(u.inverse());
    for (int k = 0; k < cols; ++k) D[i][k] = uu * D[i][k];
    for (int k = 0; k < rows; ++k) sf.S[i][k] = uu * sf.S[i][k];
    for (int k = 0; k < rows; ++k) sf.Sinv[k][i] = sf.Sinv[k][i] * ui;
  };
  auto col_add = [&](int j, int i, const UPoly& c) {  // col_j += c col_i
    for (int k = 0; k < rows; ++k) D[k][j] = D[k][j] + c * D[k][i];
    for (int k = 0; k < cols; ++k) sf.T[k][j] = sf.T[k][j] + c * sf.T[k][i];
    for (int k = 0; k < cols; ++k) sf.Tinv[i][k] = sf.Tinv[i][k] - c * sf.Tinv[j][k];
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows; ++k) std::swap(D[k][i], D[k][j]);
    for (int k = 0; k < cols; ++k) std::swap(sf.T[k][i], sf.T[k][j]);
    std::swap(sf.Tinv[i], sf.Tinv[j]);
  };

  int n = std::min(rows, cols);
  for (int k = 0; k < n; ++k) {
    for (;;) {
      int bi = -1, bj = -1, bd = 1 << 30;
      for (int i = k; i < rows; ++i)
        for (int j = k; j < cols; ++j)
          if (!D[i][j].is_zero() && D[i][j].deg() < bd) bd = D[i][j].deg(), bi = i, bj = j;
      if (bi < 0) goto done;
      row_swap(k, bi);
      col_swap(k, bj);
      bool clean = true;
      for (int i = k + 1; i < rows; ++i) {
        if (D[i][k].is_zero()) continue;
        UPoly q, r;
        UPoly::divmod(D[i][k], D[k][k], q, r);
        row_add(i, k, -q);
        if (!r.is_zero()) clean = false;
      }
      for (int j = k + 1; j < cols; ++j) {
        if (D[k][j].is_zero()) continue;
        UPoly q, r;
        UPoly::divmod(D[k][j], D[k][k], q, r);
        col_add(j, k, -q);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;
      // divisibility of the remaining block by the pivot
      int bad = -1;
      for (int i = k + 1; i < rows && bad < 0; ++i)
        for (int j = k + 1; j < cols; ++j)
          if (!D[i][j].mod(D[k][k]).is_zero()) {
            bad = i;
            break;
          }
      if (bad >= 0) {
        row_add(k, bad, UPoly(CycNum(1)));
        continue;
      }
      row_scale(k, D[k][k].lc().inverse());
      break;
    }
    sf.rank = k + 1;
  }
done:
  for (int k = 0; k < sf.rank; ++k) sf.diag.push_back(D[k][k]);
  return sf;
}

// ---------------------------------------------------------------- homology

inline UPoly to_upoly(const MPoly& p, Var w) {
  UPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (m.deg != m.e[w]) throw TooManyInternalVariables("reduced entry depends on more than one variable");
    int k = m.e[w];
    if (static_cast<int>(r.c.size()) <= k) r.c.resize(k + 1);
    r.c[k] += c;
  }
  r.trim();
  return r;
}

inline MPoly from_upoly(const UPoly& u, Var w) {
  std::vector<MPoly::Term> ts;
  for (size_t k = 0; k < u.c.size(); ++k)
    if (!u.c[k].is_zero()) ts.push_back({Mono::var(w, static_cast<int>(k)), u.c[k]});
  return MPoly::from_terms(ts);
}

struct HomologyComponent {
  int dim = 0;
  int r = 0;        // rank of the chain module
  int rank_b = 0;   // rank of the outgoing differential
  UMat Tinv_b;      // coordinates change for the outgoing differential
  UMat U;           // reduces kernel coordinates
  std::vector<UPoly> ediag;
  int k = 0;        // kernel rank
  int rank_c = 0;
  std::vector<std::vector<UPoly>> reps;
  std::vector<std::pair<int, int>> slots;  // (kernel coordinate, power) of each basis vector
};

struct HomologyData {
  int dim_h0 = 0, dim_h1 = 0;
  bool field_case = true;
  Var w = internal_var(1);
  std::array<HomologyComponent, 2> comp;
  int dim(int e) const { return e == 0 ? dim_h0 : dim_h1; }

  std::vector<CycNum> coords(int e, const std::vector<UPoly>& v) const {
    const auto& H = comp[e];
    std::vector<UPoly> t(H.r);
    for (int i = 0; i < H.r; ++i)
      for (int j = 0; j < H.r; ++j) t[i] = t[i] + H.Tinv_b[i][j] * v[j];
    for (int i = 0; i < H.rank_b; ++i)
      if (!t[i].is_zero()) throw Error("homology coordinates of a non-cycle");
    std::vector<UPoly> c(t.begin() + H.rank_b, t.end());
    std::vector<UPoly> c2(H.k);
    for (int i = 0; i < H.k; ++i)
      for (int j = 0; j < H.k; ++j) c2[i] = c2[i] + H.U[i][j] * c[j];
    std::vector<CycNum> out;
    for (auto [i, p] : H.slots) {
      if (field_case)
        out.push_back(c2[i].at(0));
      else
        out.push_back(c2[i].mod(H.ediag[i]).at(p));
    }
    return out;
  }
};

inline UMat reduced_matrix(const MatrixBifact& M, int e, Var w) {
  const auto& A = M.dmat(e);
  UMat r(A.rows, std::vector<UPoly>(A.cols));
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) r[i][j] = to_upoly(eval_zero(A(i, j), {X, Y}), w);
  return r;
}

inline HomologyData quotient_homology(const MatrixBifact& M) {
  if (M.n_int > 1) throw TooManyInternalVariables("homology needs at most one internal variable");
  HomologyData H;
  H.field_case = M.n_int == 0;
  for (int e = 0; e < 2; ++e) {
    auto& C = H.comp[e];
    int r = M.rank(e), r2 = M.rank(1 - e);
    C.r = r;
    UMat B = reduced_matrix(M, e, H.w);      // C_e -> C_{e+1}
    UMat A = reduced_matrix(M, 1 - e, H.w);  // C_{e+1} -> C_e
    SmithForm sb = smith_normal_form(B, r2, r);
    C.rank_b = sb.rank;
    C.Tinv_b = sb.Tinv;
    C.k = r - sb.rank;
    // image generators in kernel coordinates
    UMat TA = umat_mul(sb.Tinv, A, r);
    UMat Cm(C.k, std::vector<UPoly>(r2));
    for (int i = 0; i < C.k; ++i) Cm[i] = TA[sb.rank + i];
    for (int i = 0; i < sb.rank; ++i)
      for (int j = 0; j < r2; ++j)
        if (!TA[i][j].is_zero()) throw Error("d^2 does not vanish modulo the external variables");
    SmithForm sc = smith_normal_form(Cm, C.k, r2);
    C.U = sc.S;
    C.rank_c = sc.rank;
    C.ediag = sc.diag;
    C.ediag.resize(C.k);
    // basis vectors of the quotient, as kernel coordinates before U
    auto add_rep = [&](int i, int p) {
      std::vector<UPoly> unit(C.k);
      unit[i] = UPoly::monomial(p, CycNum(1));
      std::vector<UPoly> c(C.k);
      for (int a = 0; a < C.k; ++a)
        for (int b = 0; b < C.k; ++b) c[a] = c[a] + sc.Sinv[a][b] * unit[b];
      std::vector<UPoly> v(r);
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < C.k; ++b) v[a] = v[a] + sb.T[a][sb.rank + b] * c[b];
      C.reps.push_back(v);
      C.slots.push_back({i, p});
    };
    for (int i = 0; i < C.k; ++i) {
      if (i < sc.rank) {
        if (H.field_case) continue;
        for (int p = 0; p < C.ediag[i].deg(); ++p) add_rep(i, p);
      } else {
        if (!H.field_case) throw InfiniteHomology("homology is not finite dimensional");
        add_rep(i, 0);
      }
    }
    C.dim = static_cast<int>(C.reps.size());
  }
  H.dim_h0 = H.comp[0].dim;
  H.dim_h1 = H.comp[1].dim;
  return H;
}

inline int rank_of(std::vector<std::vector<CycNum>> m) {
  int rows = static_cast<int>(m.size());
  if (!rows) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    CycNum inv = m[rank][c].inverse();
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      CycNum f = m[r][c] * inv;
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

struct InducedMap {
  std::array<std::vector<std::vector<CycNum>>, 2> mat;  // mat[e]: H_{e+deg}(N) x H_e(M)
  HomologyData hs, ht;
  int deg = 0;
};

inline InducedMap induced_h(const MFMorphism& f) {
  InducedMap im;
  im.deg = f.deg;
  im.hs = quotient_homology(*f.src);
  im.ht = quotient_homology(*f.tgt);
  Var ws = internal_var(1), wt = internal_var(1);
  for (int e = 0; e < 2; ++e) {
    int te = (e + f.deg) % 2;
    int rows = im.ht.dim(te);
    auto& M = im.mat[e];
    M.assign(rows, std::vector<CycNum>());
    for (const auto& rep : im.hs.comp[e].reps) {
      std::vector<UPoly> img(f.tgt->rank(te));
      for (int t = 0; t < f.tgt->rank(te); ++t) {
        MPoly acc;
        for (int s = 0; s < f.src->rank(e); ++s) {
          if (rep[s].is_zero()) continue;
          acc += f.f[e](t, s).apply(from_upoly(rep[s], ws));
        }
        img[t] = to_upoly(eval_zero(acc, {X, Y}), wt);
      }
      auto col = im.ht.coords(te, img);
      for (int r = 0; r < rows; ++r) M[r].push_back(col[r]);
    }
  }
  return im;
}

inline bool is_homotopy_iso(const MFMorphism& f) {
  if (f.deg != 0) return false;
  InducedMap im = induced_h(f);
  for (int e = 0; e < 2; ++e) {
    int n = im.hs.dim(e);
    if (n != im.ht.dim(e)) return false;
    if (n == 0) continue;
    if (rank_of(im.mat[e]) != n) return false;
  }
  return true;
}

// ---------------------------------------------------------------- exact linear solving

struct LinearResult {
  bool consistent = false;
  int unknowns = 0, rank = 0;
  std::vector<CycNum> solution;
  std::vector<std::vector<CycNum>> kernel;
};

// rows: sparse equations sum_k row[k] x_k = rhs
inline LinearResult solve_sparse(int n, const std::vector<std::map<int, CycNum>>& rows_in,
                                 const std::vector<CycNum>& rhs_in, bool want_kernel) {
  LinearResult res;
  res.unknowns = n;
  std::map<int, std::map<int, CycNum>> piv;  // pivot column -> normalised row (column n = rhs)
  for (size_t r = 0; r < rows_in.size(); ++r) {
    std::map<int, CycNum> row = rows_in[r];
    if (!rhs_in[r].is_zero()) row[n] = rhs_in[r];
    for (auto it = row.begin(); it != row.end() && it->first < n;) {
      auto p = piv.find(it->first);
      if (p == piv.end()) {
        ++it;
        continue;
      }
      CycNum f = it->second;
      int col = it->first;
      for (auto& [c, v] : p->second) {
        CycNum nv = row[c] - f * v;
        if (nv.is_zero())
          row.erase(c);
        else
          row[c] = nv;
      }
      it = row.upper_bound(col);
    }
    if (row.empty()) continue;
    int lead = row.begin()->first;
    if (lead == n) return res;  // inconsistent
    CycNum inv = row.begin()->second.inverse();
    for (auto& [c, v] : row) v = v * inv;
    piv[lead] = std::move(row);
  }
  res.consistent = true;
  res.rank = static_cast<int>(piv.size());
  auto back = [&](std::vector<CycNum>& x, bool with_rhs) {
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
      CycNum v;
      for (auto& [c, a] : it->second) {
        if (c == it->first) continue;
        if (c == n) {
          if (with_rhs) v += a;
        } else if (!x[c].is_zero()) {
          v -= a * x[c];
        }
      }
      x[it->first] = v;
    }
  };
  res.solution.assign(n, CycNum());
  back(res.solution, true);
  if (want_kernel)
    for (int f = 0; f < n; ++f) {
      if (piv.count(f)) continue;
      std::vector<CycNum> x(n, CycNum());
      x[f] = CycNum(1);
      back(x, false);
      res.kernel.push_back(x);
    }
  return res;
}

// a morphism with indeterminate coefficients on prescribed monomials
struct UnknownMorphism {
  Obj src, tgt;
  int deg = 0;
  struct Slot {
    int e, t, s;
    Mono m;
  };
  std::vector<Slot> slots;

  int size() const { return static_cast<int>(slots.size()); }
  MFMorphism build(const std::vector<CycNum>& x) const {
    std::array<Mat<MPoly>, 2> ent;
    for (int e = 0; e < 2; ++e) ent[e] = Mat<MPoly>(tgt->rank((e + deg) % 2), src->rank(e));
    for (size_t k = 0; k < slots.size(); ++k)
      if (!x[k].is_zero()) {
        auto& sl = slots[k];
        ent[sl.e](sl.t, sl.s) += MPoly::term(sl.m, x[k]);
      }
    MFMorphism f = zero_morphism(src, tgt, deg);
    for (int e = 0; e < 2; ++e) f.f[e] = to_ops(ent[e]);
    f.name = "h";
    return f;
  }
  MFMorphism unit(int k) const {
    std::vector<CycNum> x(slots.size(), CycNum());
    x[k] = CycNum(1);
    return build(x);
  }
};

// polynomial degree forced on each entry by the charges, for a map of C-degree cdeg
inline UnknownMorphism graded_unknowns(const Obj& src, const Obj& tgt, int deg, const Rational& cdeg) {
  if (src->n_int) throw TooManyInternalVariables("unknown morphisms need a finite-rank source");
  UnknownMorphism u{src, tgt, deg, {}};
  std::vector<Var> vars = tgt->all_vars();
  Rational half_d = frac(tgt->d(), 2);
  for (int e = 0; e < 2; ++e) {
    int te = (e + deg) % 2;
    for (int t = 0; t < tgt->rank(te); ++t)
      for (int s = 0; s < src->rank(e); ++s) {
        Rational D = (src->charge(e, s) + cdeg - tgt->charge(te, t)) * half_d;
        D.canonicalize();
        if (D.get_den() != 1 || D < 0) continue;
        for (auto& m : monomials_of_degree(vars, static_cast<int>(D.get_num().get_si()))) u.slots.push_back({e, t, s, m});
      }
  }
  return u;
}

inline UnknownMorphism bounded_unknowns(const Obj& src, const Obj& tgt, int deg, int bound) {
  if (src->n_int) throw TooManyInternalVariables("unknown morphisms need a finite-rank source");
  UnknownMorphism u{src, tgt, deg, {}};
  std::vector<Var> vars = tgt->all_vars();
  for (int e = 0; e < 2; ++e) {
    int te = (e + deg) % 2;
    for (int t = 0; t < tgt->rank(te); ++t)
      for (int s = 0; s < src->rank(e); ++s)
        for (int k = 0; k <= bound; ++k)
          for (auto& m : monomials_of_degree(vars, k)) u.slots.push_back({e, t, s, m});
  }
  return u;
}

// the entries of a morphism out of a finite-rank source, as polynomials
inline std::vector<MPoly> entries_of(const MFMorphism& f) {
  std::vector<MPoly> out;
  for (int e = 0; e < 2; ++e)
    for (auto& op : f.f[e].a) out.push_back(op.apply(MPoly(1)));
  return out;
}

// solve residual(h) = 0 for h in the span of the unknowns; residual must be affine
inline LinearResult solve_morphism(const UnknownMorphism& u,
                                   const std::function<std::vector<MPoly>(const MFMorphism&)>& residual,
                                   bool want_kernel = false) {
  std::vector<CycNum> zero(u.slots.size(), CycNum());
  std::vector<MPoly> r0 = residual(u.build(zero));
  std::map<std::pair<size_t, Mono>, int, std::less<>> eq_index;
  auto key_less = [](const std::pair<size_t, Mono>& a, const std::pair<size_t, Mono>& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  };
  std::map<std::pair<size_t, Mono>, int, decltype(key_less)> idx(key_less);
  std::vector<std::map<int, CycNum>> rows;
  std::vector<CycNum> rhs;
  auto row_of = [&](size_t r, const Mono& m) {
    auto it = idx.find({r, m});
    if (it != idx.end()) return it->second;
    int k = static_cast<int>(rows.size());
    idx.emplace(std::make_pair(r, m), k);
    rows.emplace_back();
    rhs.push_back(CycNum());
    return k;
  };
  for (size_t r = 0; r < r0.size(); ++r)
    for (const auto& [m, c] : r0[r].terms()) rhs[row_of(r, m)] = -c;
  for (int k = 0; k < u.size(); ++k) {
    std::vector<MPoly> rk = residual(u.unit(k));
    for (size_t r = 0; r < rk.size(); ++r) {
      MPoly col = rk[r] - r0[r];
      for (const auto& [m, c] : col.terms()) rows[row_of(r, m)][k] = c;
    }
  }
  return solve_sparse(u.size(), rows, rhs, want_kernel);
}

struct HomotopyResult {
  bool found = false;
  bool definitive = false;  // true when the search space was forced by the grading
  int unknowns = 0;
  std::optional<MFMorphism> h;
};

inline int max_entry_degree(const MatrixBifact& M) {
  int r = 0;
  for (int e = 0; e < 2; ++e)
    for (auto& p : M.dmat(e).a) r = std::max(r, p.degree());
  return r;
}

// odd h with f - g = d h + h d
inline HomotopyResult homotopy_solve(const MFMorphism& f, const MFMorphism& g, int degree_bound = -1) {
  MFMorphism diff = f - g;
  HomotopyResult hr;
  UnknownMorphism u;
  bool graded = f.src->graded() && f.tgt->graded() && degree_bound < 0;
  if (graded) {
    u = graded_unknowns(f.src, f.tgt, (f.deg + 1) % 2, Rational(-1));
    hr.definitive = true;
  } else {
    if (degree_bound < 0) {
      int b = std::max(max_entry_degree(*f.src), max_entry_degree(*f.tgt));
      for (auto& p : entries_of(f)) b = std::max(b, p.degree());
      for (auto& p : entries_of(g)) b = std::max(b, p.degree());
      degree_bound = b + f.src->d();
    }
    u = bounded_unknowns(f.src, f.tgt, (f.deg + 1) % 2, degree_bound);
  }
  hr.unknowns = u.size();
  std::vector<MPoly> target = entries_of(diff);
  auto residual = [&](const MFMorphism& h) {
    std::vector<MPoly> r = entries_of(delta(h));
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - target[i];
    return r;
  };
  LinearResult lr = solve_morphism(u, residual);
  if (lr.consistent) {
    hr.found = true;
    hr.h = u.build(lr.solution);
  }
  return hr;
}

// dimension and basis of the space of C-degree-cdeg cycles src -> tgt
struct CycleSpace {
  int dim = 0;
  std::vector<MFMorphism> basis;
};

inline CycleSpace graded_cycles(const Obj& src, const Obj& tgt, const Rational& cdeg = Rational(0), int deg = 0) {
  UnknownMorphism u = graded_unknowns(src, tgt, deg, cdeg);
  CycleSpace cs;
  if (u.size() == 0) return cs;
  auto residual = [&](const MFMorphism& h) { return entries_of(delta(h)); };
  LinearResult lr = solve_morphism(u, residual, true);
  cs.dim = static_cast<int>(lr.kernel.size());
  for (auto& k : lr.kernel) cs.basis.push_back(u.build(k));
  return cs;
}

// right inverses of the unit isomorphisms: cycles psi with lambda o psi = 1
inline MFMorphism solve_section(const MFMorphism& retraction) {
  const Obj& M = retraction.tgt;
  const Obj& S = retraction.src;
  UnknownMorphism u = (M->graded() && S->graded())
                          ? graded_unknowns(M, S, 0, Rational(0))
                          : bounded_unknowns(M, S, 0, max_entry_degree(*M) + M->d());
  MFMorphism one = identity(M);
  std::vector<MPoly> id_entries = entries_of(one);
  auto residual = [&](const MFMorphism& h) {
    std::vector<MPoly> r = entries_of(delta(h));
    std::vector<MPoly> c = entries_of(compose(retraction, h));
    for (size_t i = 0; i < c.size(); ++i) r.push_back(c[i] - id_entries[i]);
    return r;
  };
  LinearResult lr = solve_morphism(u, residual);
  if (!lr.consistent) throw Error("no section of " + retraction.name + " in the search space");
  MFMorphism s = u.build(lr.solution);
  s.name = retraction.name + "^-1";
  return s;
}

}  // namespace mfcft
