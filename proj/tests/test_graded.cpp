#include <gtest/gtest.h>

#include "printers.hpp"
#include "mfcft/graded.hpp"

using namespace mfcft;

namespace {

MPoly entry(const MFMorphism& f, int e, int i) { return f.f[e](i, 0).apply(MPoly(1)); }

int total_degree(const MPoly& p) {
  int d = -1;
  for (auto& [m, c] : p.terms()) {
    if (d >= 0 && d != m.deg) return -2;
    d = m.deg;
  }
  return d;
}

GClass cls(std::initializer_list<GradedLabel> ls) {
  GClass c;
  for (auto& l : ls) c[l] += 1;
  return c;
}

}  // namespace

TEST(Graded, UnitCharges) {
  for (int d : {3, 5, 7}) {
    Setting st(d);
    Obj I = hat_p(st, PermLabel::of(d, {0}));
    EXPECT_EQ(I->charge(0, 0), 0);
    EXPECT_EQ(I->charge(1, 0), frac(2, d) - 1);
    EXPECT_EQ(I->d1(0, 0), unit_mf(st)->d1(0, 0));
    EXPECT_EQ(graded_unit(st)->charge(0, 0), 0);
  }
}

TEST(Graded, ChargeFormula) {
  Setting st(7);
  for (int mask = 1; mask < 127; ++mask) {
    std::vector<int> S;
    for (int j = 0; j < 7; ++j)
      if (mask >> j & 1) S.push_back(j);
    Obj P = hat_p(st, PermLabel::of(7, S));
    int n = static_cast<int>(S.size());
    EXPECT_EQ(P->charge(0, 0), frac(1 - n, 7));
    EXPECT_EQ(P->charge(1, 0), P->charge(0, 0) + frac(2 * n, 7) - 1);
  }
}

TEST(Graded, GradedCheck) {
  Setting st(5);
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<int> S;
    for (int j = 0; j < 5; ++j)
      if (mask >> j & 1) S.push_back(j);
    EXPECT_TRUE(graded_check(*hat_p(st, PermLabel::of(5, S))));
  }
  EXPECT_TRUE(graded_check(*graded_unit(st)));
  Obj P = hat_p(st, 1, 2);
  EXPECT_FALSE(graded_check(*with_charges(P, {P->charge(0, 0)}, {P->charge(1, 0) + frac(1, 5)})));
  EXPECT_TRUE(graded_check(*with_charges(P, {P->charge(0, 0) + 1}, {P->charge(1, 0) + 1})));
  EXPECT_TRUE(graded_check(*tensor_mf(hat_p(st, 0, 1), hat_p(st, 3, 2))));
}

TEST(Graded, DualsOfGradedObjects) {
  Setting st(5);
  for (auto S : {PermLabel::of(5, {0}), PermLabel::of(5, {1, 2}), PermLabel::consecutive(5, 3, 3)}) {
    Obj D = dual_rank1(hat_p(st, S));
    ASSERT_TRUE(D->graded());
    EXPECT_TRUE(graded_check(*D));
    CycleSpace cs = graded_cycles(hat_p(st, S.negated()), D);
    ASSERT_EQ(cs.dim, 1);
    EXPECT_TRUE(is_homotopy_iso(cs.basis[0]));
  }
}

TEST(Graded, HomRigidity) {
  Setting st(5);
  EXPECT_EQ(graded_hom_dim(st, PermLabel::of(5, {1, 2}), PermLabel::of(5, {1, 2})), 1);
  EXPECT_EQ(graded_hom_dim(st, PermLabel::of(5, {1, 2}), PermLabel::of(5, {2, 3})), 0);
  EXPECT_EQ(graded_hom_dim(st, PermLabel::of(5, {1, 2}), PermLabel::of(5, {1, 2, 3})), 0);
  EXPECT_EQ(graded_hom_dim(st, PermLabel::of(5, {0, 2}), PermLabel::of(5, {0, 2})), 1);
}

TEST(Graded, GPairClosedForms) {
  Setting st(5);
  MPoly x = MPoly::var(X), w = MPoly::var(internal_var(1)), z = MPoly::var(Y);
  auto eta = [](long k) { return eta_power(5, k); };
  CycNum one(1);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int mu = 1; mu <= 3; ++mu) {
        GPair g = g_pair(st, a, b, mu);
        EXPECT_EQ(entry(g.gm, 1, 1), MPoly(1));
        CycNum den = one - eta(-1);
        MPoly want = (x.scaled(-(eta(-a - 1) * (one - eta(-mu)) / den)) + w.scaled((one - eta(-mu - 1)) / den) -
                      z.scaled(eta(b)))
                         .scaled(eta(-a * mu));
        EXPECT_EQ(entry(g.gm, 0, 0), want);
        EXPECT_EQ(total_degree(entry(g.gm, 1, 0)), mu - 1);
        EXPECT_EQ(total_degree(entry(g.gp, 1, 0)), mu);
        EXPECT_EQ(entry(g.gp, 0, 0), MPoly(1));
      }
}

TEST(Graded, GPairCertificates) {
  for (int d : {3, 5}) {
    Setting st(d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int mu = 1; mu <= d - 2; ++mu) {
          GPair g = g_pair(st, a, b, mu);
          EXPECT_TRUE(graded_check(*g.AB));
          EXPECT_TRUE(graded_check(*g.Qm));
          EXPECT_TRUE(graded_check(*g.Qp));
          EXPECT_TRUE(is_cycle(g.gm));
          EXPECT_TRUE(is_cycle(g.gp));
          EXPECT_EQ(morphism_cdegree(g.gm), Rational(0));
          EXPECT_EQ(morphism_cdegree(g.gp), Rational(0));
          HomologyData H = quotient_homology(*g.AB);
          int want = mu < d - 2 ? 2 : 1;
          EXPECT_EQ(H.dim_h0, want);
          EXPECT_EQ(H.dim_h1, want);
          EXPECT_TRUE(is_homotopy_iso(hstack(g.gm, g.gp)));
        }
  }
  EXPECT_THROW(g_pair(Setting(5), 0, 0, 0), OutOfRange);
  EXPECT_THROW(g_pair(Setting(5), 0, 0, 4), OutOfRange);
}

TEST(Graded, DecomposeExamples) {
  auto sorted = [](std::vector<GradedLabel> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(decompose_product(5, 0, 1, 0, 1)), sorted({{1, 0}, {0, 2}}));
  EXPECT_EQ(sorted(decompose_product(5, 0, 1, 0, 2)), sorted({{1, 1}, {0, 3}}));
  EXPECT_EQ(decompose_product(3, 1, 1, 1, 1), (std::vector<GradedLabel>{GradedLabel{0, 0}}));
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int mu = 0; mu <= 3; ++mu)
        EXPECT_EQ(decompose_product(5, a, 0, b, mu), std::vector<GradedLabel>{normal_label(5, a + b, mu)});
  EXPECT_THROW(decompose_product(5, 0, 4, 0, 1), OutOfRange);
}

TEST(Graded, DecomposeIsSymmetric) {
  for (int d : {3, 5, 7})
    for (auto& X : graded_labels(d))
      for (auto& Y : graded_labels(d)) {
        auto p = decompose_product(d, X.a, X.lambda, Y.a, Y.lambda);
        auto q = decompose_product(d, Y.a, Y.lambda, X.a, X.lambda);
        std::sort(p.begin(), p.end());
        std::sort(q.begin(), q.end());
        EXPECT_EQ(p, q);
      }
}

TEST(Graded, BasicDecompositionsAreCertified) {
  Setting st(5);
  for (int a = 0; a < 5; ++a) {
    Decomposition z = decompose_basic(st, a, 0, 2, 3);
    EXPECT_TRUE(z.certified) << z.method;
    Decomposition one = decompose_basic(st, a, 1, 1, 2);
    EXPECT_TRUE(one.certified) << one.method;
    auto s = one.summands;
    std::sort(s.begin(), s.end());
    std::vector<GradedLabel> want{normal_label(5, a + 2, 1), normal_label(5, a + 1, 3)};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(s, want);
  }
  Decomposition top = decompose_basic(st, 2, 1, 0, 3);
  EXPECT_EQ(top.summands, std::vector<GradedLabel>{normal_label(5, 3, 2)});
  EXPECT_TRUE(top.certified);
}

TEST(Graded, FusionRingStructure) {
  EXPECT_EQ(mf_fusion_ring(3).size(), 6);
  EXPECT_EQ(mf_fusion_ring(5).size(), 20);
  for (int d : {3, 5}) {
    FusionRing R = mf_fusion_ring(d);
    EXPECT_EQ(R.labels[R.unit], "0:0");
    EXPECT_TRUE(R.unit_ok());
    EXPECT_TRUE(R.commutative());
    EXPECT_TRUE(R.associative());
    EXPECT_TRUE(R.rigid());
    for (auto& g : graded_labels(d)) {
      GradedLabel dual = normal_label(d, -g.a - g.lambda, g.lambda);
      EXPECT_EQ(R.dual(R.index(g.str())), R.index(dual.str()));
    }
  }
}

TEST(Graded, IndexConventions) {
  for (int d : {3, 5, 7}) {
    FusionRing R = mf_fusion_ring(d);
    EXPECT_EQ(R.N, index_formula_ring(d, 1).N);
    EXPECT_NE(R.N, index_formula_ring(d, -1).N);
    GradedLabel T = normal_label(d, (d - 1) / 2, 1);
    EXPECT_EQ(index_formula_product(d, T, T, 1).count({0, 0}), 1u);
    EXPECT_EQ(index_formula_product(d, T, T, -1).count({0, 0}), 0u);
  }
  EXPECT_EQ(index_formula_product(5, {0, 1}, {0, 1}, 1), cls({{1, 0}, {0, 2}}));
}
