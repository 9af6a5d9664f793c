#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "printers.hpp"
#include "mfcft/correspondence.hpp"

using namespace mfcft;

namespace {

std::vector<PermLabel> proper_subsets(int d) {
  std::vector<PermLabel> out;
  for (int mask = 1; mask < (1 << d) - 1; ++mask) {
    std::vector<int> s;
    for (int j = 0; j < d; ++j)
      if (mask >> j & 1) s.push_back(j);
    out.push_back(PermLabel::of(d, s));
  }
  return out;
}

// largest eigenvalue of left multiplication by label i; power iteration on N_i + 1
double pf_eigenvalue(const FusionRing& R, int i) {
  int n = R.size();
  std::vector<double> v(n, 1.0);
  double norm = 0;
  for (int it = 0; it < 3000; ++it) {
    std::vector<double> w(v);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) w[k] += R.N[i][j][k] * v[j];
    norm = 0;
    for (double x : w) norm = std::max(norm, x);
    for (int k = 0; k < n; ++k) v[k] = w[k] / norm;
  }
  return norm - 1;
}

}  // namespace

TEST(Correspondence, TauAtZeroIsIdentity) {
  for (int d : {3, 5}) {
    Setting st(d);
    for (auto& S : proper_subsets(d)) EXPECT_TRUE(equal(tau(st, S, 0), identity(perm_mf(st, S)))) << S.str();
  }
}

TEST(Correspondence, TauOnUnitIsTwist) {
  for (int d : {3, 5}) {
    Setting st(d);
    auto I = PermLabel::of(d, {0});
    for (int a = 0; a < d; ++a) EXPECT_TRUE(equal(tau(st, I, a), s_iso(st, I, a, -a)));
  }
}

TEST(Correspondence, Cocycle) {
  Setting st5(5);
  EXPECT_TRUE(check_cocycle(perm_structure(st5, PermLabel::of(5, {2, 3})), 5));
  for (int d : {3, 5}) {
    Setting st(d);
    for (auto& S : proper_subsets(d)) EXPECT_TRUE(check_cocycle(perm_structure(st, S), d)) << d << " " << S.str();
  }
}

TEST(Correspondence, EquivarianceNeedsTheScalar) {
  for (int d : {3, 5}) {
    Setting st(d);
    Duality D = duality_un(st);
    PermLabel S = self_dual_label(d);
    EquivStructure bare{D.T, [st, S](int a) { return s_iso(st, S, a, -a); }};
    EXPECT_TRUE(check_cocycle(bare, d));
    EquivStructure EI = perm_structure(st, PermLabel::of(d, {0}), D.I);
    EXPECT_FALSE(check_equivariant(D.n, EI, tensor_structure(bare, bare), d)) << d;
  }
}

TEST(Correspondence, DualityMapsAreEquivariant) {
  for (int d : {3, 5}) {
    Setting st(d);
    auto eq = duality_equivariance(st, duality_un(st));
    EXPECT_TRUE(eq.u) << d;
    EXPECT_TRUE(eq.n) << d;
  }
}

TEST(Correspondence, CoevIsEquivariant) {
  for (int d : {3, 5}) {
    Setting st(d);
    for (auto& S : proper_subsets(d))
      if (S.S.size() <= 2) EXPECT_TRUE(coev_equivariant(st, S)) << d << " " << S.str();
  }
}

TEST(Correspondence, IdentityIsEquivariant) {
  Setting st(5);
  for (auto& S : {PermLabel::of(5, {0}), PermLabel::of(5, {1, 2}), PermLabel::of(5, {0, 2, 4})}) {
    auto E = perm_structure(st, S);
    EXPECT_TRUE(check_equivariant(identity(E.obj), E, E, 5));
  }
}

TEST(Correspondence, HexagonIsStrict) {
  Setting st(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) EXPECT_TRUE(mu_hexagon(st, a, b, c)) << a << b << c;
}

TEST(Correspondence, ChiIsCertified) {
  for (int d : {3, 5}) {
    Setting st(d);
    for (int a = 0; a < d; ++a) EXPECT_TRUE(chi_certified(st, a)) << d << " " << a;
  }
}

TEST(Correspondence, LabelMap) {
  for (int d : {3, 5, 7}) {
    EXPECT_EQ(label_map(d, 1, d), (GradedLabel{(d - 1) / 2, 1}));
    for (int a = 0; a < d; ++a) EXPECT_EQ(label_map(d, 0, 2 * a), (GradedLabel{a, 0}));
    EXPECT_EQ(label_map(d, 0, 0), (GradedLabel{0, 0}));
  }
  EXPECT_THROW(label_map(5, 1, 2), ParityViolation);
}

TEST(Correspondence, LabelMapIsBijective) {
  for (int d : {3, 5, 7}) {
    std::set<GradedLabel> img;
    for (auto& L : ns_simples(d)) img.insert(label_map(d, L));
    auto gl = graded_labels(d);
    EXPECT_EQ(img.size(), static_cast<size_t>(d * (d - 1)));
    EXPECT_EQ(img, std::set<GradedLabel>(gl.begin(), gl.end()));
  }
}

TEST(Correspondence, FusionRingsAgree) {
  std::map<int, int> products{{3, 36}, {5, 400}, {7, 1764}};
  for (auto [d, n] : products) {
    auto rep = verify_equivalence(Setting(d));
    EXPECT_EQ(rep.products, n);
    EXPECT_EQ(rep.mismatches, 0);
    EXPECT_TRUE(rep.ok()) << d;
  }
}

TEST(Correspondence, GeneratorSquareAtFive) {
  GradedProducts P(5);
  GradedLabel T = label_map(5, 1, 5);
  GClass want{{{0, 0}, 1}, {{4, 2}, 1}};
  EXPECT_EQ(P.product(T, T), want);
  GClass cft;
  for (auto& c : ns_fuse(5, {1, 5}, {1, 5})) cft[label_map(5, c)] += 1;
  EXPECT_EQ(cft, want);
}

TEST(Correspondence, GaloisConjugateRoot) {
  Setting st(5, 2);
  auto rep = verify_equivalence(st);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.products, 400);
  EXPECT_EQ(quantum_dim(st, 1), st.kappa());
  EXPECT_NEAR(to_float(st.kappa()).real(), 2 * std::cos(3 * std::numbers::pi / 5), 1e-12);
}

TEST(Correspondence, PerronFrobeniusDimensions) {
  for (int d : {3, 5}) {
    FusionRing R = mf_fusion_ring(d);
    for (auto& L : ns_simples(d)) {
      GradedLabel g = label_map(d, L);
      int i = R.index(g.str());
      ASSERT_GE(i, 0);
      double want = std::sin((L.l + 1) * std::numbers::pi / d) / std::sin(std::numbers::pi / d);
      EXPECT_NEAR(pf_eigenvalue(R, i), want, 1e-6) << d << " " << L.str();
    }
  }
}
