#include <gtest/gtest.h>

#include <random>

#include "printers.hpp"
#include "mfcft/polyring.hpp"

using namespace mfcft;

namespace {

const MPoly x = MPoly::var(X), y = MPoly::var(Y), z = MPoly::var(Z);

MPoly random_poly(int d, std::mt19937& g) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 3);
  MPoly p;
  for (int k = 0; k < 4; ++k) p = p + MPoly(c(g)).scaled(eta_power(d, e(g))) * x.pow(e(g)) * y.pow(e(g));
  return p;
}

}  // namespace

TEST(PolyRing, Arithmetic) {
  EXPECT_EQ((x - y) * (x + y), x.pow(2) - y.pow(2));
  MPoly f = x.pow(3) + y;
  EXPECT_EQ(f + MPoly(), f);
  MPoly lhs = (x - MPoly(eta_power(3, 1)) * y) * (x - MPoly(eta_power(3, 2)) * y);
  EXPECT_EQ(lhs, x.pow(2) + x * y + y.pow(2));
}

TEST(PolyRing, ExactDivision) {
  for (int d : {3, 5, 7}) {
    MPoly q = exact_div(x.pow(d) - y.pow(d), x - y);
    MPoly want;
    for (int j = 0; j < d; ++j) want = want + x.pow(j) * y.pow(d - 1 - j);
    EXPECT_EQ(q, want);
  }
  MPoly f = x.pow(2) * z + MPoly(3);
  EXPECT_EQ(exact_div(f, MPoly(1)), f);
  EXPECT_THROW(exact_div(x, y), NotDivisible);
}

TEST(PolyRing, ExactDivisionRoundTrip) {
  std::mt19937 g(5);
  for (int t = 0; t < 20; ++t) {
    MPoly f = random_poly(5, g), h = random_poly(5, g);
    if (h.is_zero()) continue;
    EXPECT_EQ(exact_div(f * h, h), f);
  }
}

TEST(PolyRing, ScaleVariable) {
  for (int a = 0; a < 5; ++a) {
    CycNum c = eta_power(5, -a);
    EXPECT_EQ(scale_var(x - y, X, c), x.scaled(c) - y);
  }
  MPoly f = x.pow(2) * y + z;
  EXPECT_EQ(scale_var(f, Y, CycNum(1)), f);
  EXPECT_EQ(scale_var(x.pow(2), X, eta_power(3, 1)), x.pow(2).scaled(eta_power(3, 2)));
  std::mt19937 g(9);
  for (int t = 0; t < 10; ++t) {
    MPoly p = random_poly(7, g);
    CycNum c = eta_power(7, 3);
    EXPECT_EQ(scale_var(scale_var(p, X, c), X, c.inverse()), p);
  }
}

TEST(PolyRing, CoefficientExtraction) {
  MPoly f = x.pow(2) * y + MPoly(3) * y;
  EXPECT_EQ(coeff_of(f, Y, 1), x.pow(2) + MPoly(3));
  EXPECT_TRUE(coeff_of(f, Y, 5).is_zero());
  std::mt19937 g(3);
  for (int t = 0; t < 10; ++t) {
    MPoly p = random_poly(5, g), back;
    for (int k = 0; k <= p.degree_in(Y); ++k) back = back + coeff_of(p, Y, k) * y.pow(k);
    EXPECT_EQ(back, p);
  }
}

TEST(PolyRing, PermutationProducts) {
  EXPECT_EQ(perm_product(5, {0}), x - y);
  EXPECT_EQ(perm_product(5, {}), MPoly(1));
  EXPECT_EQ(perm_product(5, {0, 1, 2, 3, 4}), x.pow(5) - y.pow(5));
  for (int d : {3, 5, 7})
    for (int mask = 0; mask < (1 << d); ++mask) {
      std::vector<int> S, C;
      for (int j = 0; j < d; ++j) (mask >> j & 1 ? S : C).push_back(j);
      EXPECT_EQ(perm_product(d, S) * perm_product(d, C), x.pow(d) - y.pow(d));
    }
}

TEST(PolyRing, EqualityIsCanonical) {
  EXPECT_EQ(x * y + y * x, MPoly(2) * x * y);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_NE(x, y);
}
