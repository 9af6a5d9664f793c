#include <gtest/gtest.h>

#include <random>

#include "printers.hpp"
#include "mfcft/graded.hpp"
#include "mfcft/temperleylieb.hpp"

using namespace mfcft;

namespace {

bool same(const UPoly& a, const UPoly& b) {
  if (a.c.size() != b.c.size()) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (!(a.c[i] == b.c[i])) return false;
  return true;
}

bool divides(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.is_zero();
  return b.mod(a).is_zero();
}

UPoly ymono(int k) { return UPoly::monomial(k, CycNum(1)); }

void expect_smith(const UMat& A, int rows, int cols) {
  SmithForm sf = smith_normal_form(A, rows, cols);
  UMat SAT = umat_mul(umat_mul(sf.S, A, rows), sf.T, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      EXPECT_TRUE(same(SAT[i][j], sf.D[i][j]));
      if (i != j) {
        EXPECT_TRUE(sf.D[i][j].is_zero());
      }
    }
  UMat SSi = umat_mul(sf.S, sf.Sinv, rows), TTi = umat_mul(sf.T, sf.Tinv, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) EXPECT_TRUE(same(SSi[i][j], i == j ? UPoly(CycNum(1)) : UPoly()));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) EXPECT_TRUE(same(TTi[i][j], i == j ? UPoly(CycNum(1)) : UPoly()));
  for (size_t k = 1; k < sf.diag.size(); ++k) EXPECT_TRUE(divides(sf.diag[k - 1], sf.diag[k]));
}

std::vector<int> subset_of(int d, int mask) {
  std::vector<int> S;
  for (int j = 0; j < d; ++j)
    if (mask >> j & 1) S.push_back(j);
  return S;
}

}  // namespace

TEST(Invariants, SmithTrivial) {
  UMat A{{UPoly(CycNum(1))}};
  SmithForm sf = smith_normal_form(A, 1, 1);
  ASSERT_EQ(sf.diag.size(), 1u);
  EXPECT_TRUE(same(sf.diag[0], UPoly(CycNum(1))));
}

TEST(Invariants, SmithAlreadyDiagonal) {
  UMat A{{ymono(2), UPoly()}, {UPoly(), ymono(3)}};
  SmithForm sf = smith_normal_form(A, 2, 2);
  ASSERT_EQ(sf.diag.size(), 2u);
  EXPECT_EQ(sf.diag[0].deg(), 2);
  EXPECT_EQ(sf.diag[1].deg(), 3);
  expect_smith(A, 2, 2);
}

TEST(Invariants, SmithRandomMatrices) {
  std::mt19937 g(4);
  std::uniform_int_distribution<int> c(-2, 2), e(0, 2);
  for (int t = 0; t < 10; ++t) {
    int rows = 2 + t % 2, cols = 3 - t % 2;
    UMat A(rows, std::vector<UPoly>(cols));
    for (auto& row : A)
      for (auto& v : row) v = UPoly::monomial(e(g), CycNum(c(g))) + UPoly::monomial(e(g), eta_power(5, c(g)));
    expect_smith(A, rows, cols);
  }
}

TEST(Invariants, HomologyOfPermutationObjects) {
  for (int d : {3, 5}) {
    Setting st(d);
    for (int mask = 1; mask < (1 << d) - 1; ++mask) {
      HomologyData H = quotient_homology(*perm_mf(st, PermLabel::of(d, subset_of(d, mask))));
      EXPECT_EQ(H.dim_h0, 1);
      EXPECT_EQ(H.dim_h1, 1);
    }
    HomologyData H0 = quotient_homology(*perm_mf(st, PermLabel::of(d, {})));
    EXPECT_EQ(H0.dim_h0, 0);
    EXPECT_EQ(H0.dim_h1, 0);
  }
}

TEST(Invariants, HomologyOfPairwiseTensors) {
  Setting st(5);
  Obj P = hat_p(st, 0, 1);
  HomologyData H = quotient_homology(*tensor_mf(P, P));
  EXPECT_FALSE(H.field_case);
  EXPECT_EQ(H.dim_h0, 2);
  EXPECT_EQ(H.dim_h1, 2);
  Setting st3(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      HomologyData K = quotient_homology(*tensor_mf(hat_p(st3, a, 1), hat_p(st3, b, 1)));
      EXPECT_EQ(K.dim_h0, 1);
      EXPECT_EQ(K.dim_h1, 1);
    }
}

TEST(Invariants, HomologyOfDirectSums) {
  Setting st(5);
  Obj A = perm_mf(st, PermLabel::of(5, {1})), B = tensor_mf(hat_p(st, 0, 1), hat_p(st, 2, 1));
  Obj C = perm_mf(st, PermLabel::of(5, {0, 1, 2}));
  HomologyData h = quotient_homology(*direct_sum(A, C));
  EXPECT_EQ(h.dim_h0, 2);
  EXPECT_EQ(h.dim_h1, 2);
  HomologyData hb = quotient_homology(*B);
  EXPECT_EQ(hb.dim_h0, hb.dim_h1);
}

TEST(Invariants, TooManyInternalVariables) {
  Setting st(3);
  Obj T = perm_mf(st, self_dual_label(3));
  EXPECT_THROW(quotient_homology(*tensor_mf(tensor_mf(T, T), T)), TooManyInternalVariables);
}

TEST(Invariants, IsomorphismDetection) {
  Setting st(5);
  Obj P = perm_mf(st, PermLabel::of(5, {0}));
  EXPECT_TRUE(is_homotopy_iso(identity(P)));
  EXPECT_FALSE(is_homotopy_iso(zero_morphism(P, P)));
  EXPECT_FALSE(is_homotopy_iso(zero_morphism(P, perm_mf(st, PermLabel::of(5, {1})))));
  GPair g = g_pair(st, 0, 0, 1);
  EXPECT_TRUE(is_homotopy_iso(hstack(g.gm, g.gp)));
  EXPECT_FALSE(is_homotopy_iso(g.gm));
}

TEST(Invariants, IsomorphismsCompose) {
  Setting st(5);
  PermLabel S = PermLabel::of(5, {1, 2});
  MFMorphism a = s_iso(st, S, 1, -1), b = s_iso(st, S, 2, 0);
  MFMorphism tb = twist_mor(b, 1, -1);
  MFMorphism c = compose(tb, a);
  EXPECT_TRUE(is_homotopy_iso(a));
  EXPECT_TRUE(is_homotopy_iso(tb));
  EXPECT_TRUE(is_homotopy_iso(c));
}

TEST(Invariants, HomotopySolveTrivial) {
  Setting st(5);
  Obj P = hat_p(st, 1, 2);
  HomotopyResult r = homotopy_solve(identity(P), identity(P));
  EXPECT_TRUE(r.found);
  EXPECT_TRUE(r.definitive);
  ASSERT_TRUE(r.h.has_value());
  EXPECT_TRUE(is_zero(*r.h));
}

TEST(Invariants, HomotopySolveRejectsNonHomotopic) {
  Setting st(5);
  Obj P = hat_p(st, 1, 2);
  HomotopyResult r = homotopy_solve(identity(P), zero_morphism(P, P));
  EXPECT_FALSE(r.found);
  EXPECT_TRUE(r.definitive);
  Obj Q = perm_mf(st, PermLabel::of(5, {0, 1}));
  HomotopyResult u = homotopy_solve(identity(Q), zero_morphism(Q, Q));
  EXPECT_FALSE(u.found);
  EXPECT_FALSE(u.definitive);
}

TEST(Invariants, HomotopySolveFindsWitness) {
  Setting st(5);
  Obj P = perm_mf(st, PermLabel::of(5, {0, 1}));
  // delta of an arbitrary odd map is null-homotopic
  MFMorphism h = zero_morphism(P, P, 1);
  h.f[0](0, 0) = LinOp::mult(MPoly::var(X) * MPoly::var(Y));
  h.f[1](0, 0) = LinOp::mult(MPoly(3));
  MFMorphism dh = delta(h);
  HomotopyResult r = homotopy_solve(dh, zero_morphism(P, P));
  EXPECT_TRUE(r.found);
  ASSERT_TRUE(r.h.has_value());
  EXPECT_TRUE(equal(delta(*r.h), dh));
}

TEST(Invariants, ZigzagHomotopyForThree) {
  TLFunctor F(Setting(3));
  auto [z1, z2] = zigzags(F);
  EXPECT_TRUE(homotopy_solve(z1, identity(F.T())).found);
  EXPECT_TRUE(homotopy_solve(z2, identity(F.T())).found);
}

TEST(Invariants, GradedCycleSpaces) {
  Setting st(5);
  EXPECT_EQ(graded_cycles(hat_p(st, 1, 2), hat_p(st, 1, 2)).dim, 1);
  EXPECT_EQ(graded_cycles(hat_p(st, 1, 2), hat_p(st, 2, 2)).dim, 0);
  EXPECT_EQ(graded_cycles(hat_p(st, 1, 1), hat_p(st, 1, 2)).dim, 0);
}
