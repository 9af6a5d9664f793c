#include <gtest/gtest.h>

#include <random>

#include "printers.hpp"
#include "mfcft/cyclofield.hpp"

using namespace mfcft;

namespace {

CycNum random_element(int d, std::mt19937& g) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  const auto& F = CycloField::get(d);
  std::vector<Rational> c;
  for (int i = 0; i < F.degree(); ++i) c.push_back(frac(num(g), den(g)));
  return CycNum(F, c);
}

}  // namespace

TEST(CycloField, ZetaTimesInverseIsOne) {
  for (int d : {3, 5, 7}) EXPECT_EQ(zeta_power(d, 1) * zeta_power(d, 2 * d - 1), CycNum::one(d));
}

TEST(CycloField, RootOfUnityOrders) {
  for (int d : {3, 5, 7, 9}) {
    EXPECT_EQ(zeta_power(d, 2 * d), CycNum::one(d));
    EXPECT_EQ(zeta_power(d, d), -CycNum::one(d));
  }
}

TEST(CycloField, CubeRootsSumToMinusOne) {
  EXPECT_TRUE((eta_power(3, 1) + eta_power(3, 2) + CycNum(1)).is_zero());
  EXPECT_EQ(eta_power(3, 1) + eta_power(3, 2), CycNum(-1));
}

TEST(CycloField, EtaPowers) {
  EXPECT_EQ(eta_power(5, 0), CycNum::one(5));
  EXPECT_EQ(eta_power(5, 7), eta_power(5, 2));
  EXPECT_EQ(eta_power(5, -1), eta_power(5, 4));
  EXPECT_EQ(eta_power(7, 1), zeta_power(7, 2));
}

TEST(CycloField, DivisionByKappaThree) { EXPECT_EQ(CycNum(1) / kappa(3), CycNum(1)); }

TEST(CycloField, DivisionByZeroThrows) {
  EXPECT_THROW(CycNum::one(5) / CycNum::zero(5), DivisionByZero);
}

TEST(CycloField, ModulusMismatchThrows) {
  EXPECT_THROW(eta_power(3, 1) + eta_power(5, 1), ModulusMismatch);
}

TEST(CycloField, QuantumIntegers) {
  for (int d : {3, 5, 7, 9}) {
    CycNum q = zeta_power(d, 1);
    EXPECT_EQ(quantum_int(1, q), CycNum(1));
    EXPECT_EQ(quantum_int(2, q), kappa(d));
    EXPECT_TRUE(quantum_int(d, q).is_zero());
    EXPECT_EQ(quantum_int(d - 1, q) * kappa(d), quantum_int(d - 2, q) + quantum_int(d, q));
  }
  EXPECT_THROW(quantum_int(2, CycNum::one(5)), DegenerateRoot);
  EXPECT_THROW(quantum_int(2, -CycNum::one(5)), DegenerateRoot);
}

TEST(CycloField, KappaValues) {
  EXPECT_EQ(kappa(3), CycNum(1));
  EXPECT_EQ(kappa(5), -(eta_power(5, 2) + eta_power(5, 3)));
  EXPECT_NEAR(to_float(kappa(5)).real(), (1 + std::sqrt(5.0)) / 2, 1e-12);
  for (int d : {3, 5, 7}) EXPECT_NEAR(to_float(kappa(d)).real(), 2 * std::cos(M_PI / d), 1e-12);
  EXPECT_THROW(kappa(4), EvenModulus);
  EXPECT_THROW(kappa(1), EvenModulus);
}

TEST(CycloField, GaloisTwist) {
  std::mt19937 g(11);
  CycNum a = random_element(5, g), b = random_element(5, g);
  EXPECT_EQ(galois_twist(a, 1), a);
  EXPECT_EQ(galois_twist(CycNum::one(5), 3), CycNum::one(5));
  EXPECT_NEAR(to_float(galois_twist(kappa(5), 3)).real(), 2 * std::cos(3 * M_PI / 5), 1e-12);
  for (int l : {3, 7, 9}) EXPECT_EQ(galois_twist(a * b, l), galois_twist(a, l) * galois_twist(b, l));
  EXPECT_THROW(galois_twist(a, 5), NotCoprime);
  EXPECT_THROW(galois_twist(a, 2), NotCoprime);
}

TEST(CycloField, ToFloat) {
  EXPECT_NEAR(to_float(kappa(3)).real(), 1.0, 1e-12);
  auto e = to_float(eta_power(3, 1));
  EXPECT_NEAR(e.real(), -0.5, 1e-12);
  EXPECT_NEAR(e.imag(), std::sqrt(3.0) / 2, 1e-12);
  EXPECT_EQ(to_float(CycNum::zero(7)), std::complex<double>(0, 0));
}

TEST(CycloField, FieldAxiomsOnRandomElements) {
  std::mt19937 g(2024);
  for (int d : {3, 5, 7}) {
    for (int trial = 0; trial < 20; ++trial) {
      CycNum a = random_element(d, g), b = random_element(d, g), c = random_element(d, g);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), CycNum::one(d));
      }
      if (!b.is_zero()) {
        EXPECT_EQ((a / b) * b, a);
      }
    }
  }
}

TEST(CycloField, SettingExposesTwoRoots) {
  Setting st(5, 2);
  EXPECT_EQ(st.eta(1), eta_power(5, 2));
  EXPECT_NEAR(to_float(st.kappa()).real(), 2 * std::cos(3 * M_PI / 5), 1e-12);
  EXPECT_EQ(st.kappa(), galois_twist(kappa(5), 3));
  EXPECT_EQ(st.qint(2), st.kappa());
  EXPECT_THROW(Setting(5, 5), NotCoprime);
}

TEST(CycloField, RationalModOne) {
  EXPECT_EQ(mod1(Rational(-1, 4)), Rational(3, 4));
  EXPECT_EQ(mod1(Rational(7, 3)), Rational(1, 3));
  EXPECT_EQ(mod1(Rational(2)), Rational(0));
}
