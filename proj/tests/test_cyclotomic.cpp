#include <gtest/gtest.h>

#include <complex>
#include <numbers>

#include "k3/cyclotomic.hpp"

using namespace k3;

namespace {

std::complex<double> embed(const CycInt& x, int power = 1) {
  double arg = 2 * std::numbers::pi * power / x.conductor();
  std::complex<double> z(std::cos(arg), std::sin(arg)), s = 0, w = 1;
  for (const auto& c : x.coefficients()) {
    s += c.convert_to<double>() * w;
    w *= z;
  }
  return s;
}

}  // namespace

TEST(CyclotomicPoly, SmallCases) {
  EXPECT_EQ(cyclotomic_poly(1), (IntPolynomial{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(2), (IntPolynomial{1, 1}));
  EXPECT_EQ(cyclotomic_poly(12), (IntPolynomial{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(9), (IntPolynomial{1, 0, 0, 1, 0, 0, 1}));
}

TEST(CyclotomicPoly, DegreeIsPhi) {
  for (unsigned m = 1; m <= 110; ++m) EXPECT_EQ(cyclotomic_poly(m).degree(), static_cast<int>(euler_phi(m))) << m;
}

TEST(CyclotomicPoly, ProductOverDivisorsIsXmMinusOne) {
  for (unsigned m : {12u, 30u, 66u, 105u}) {
    IntPolynomial p{1};
    for (unsigned d : divisors(m)) p = p * cyclotomic_poly(d);
    EXPECT_EQ(p, IntPolynomial::monomial(1, m) - IntPolynomial{1});
  }
}

TEST(CyclotomicPoly, Phi105HasCoefficientMinusTwo) {
  auto c = cyclotomic_poly(105).coefficients();
  EXPECT_TRUE(std::find(c.begin(), c.end(), BigInt(-2)) != c.end());
}

TEST(IntPolynomial, DivideExact) {
  IntPolynomial a{1, 2, 1}, b{1, 1};
  EXPECT_EQ(a.divide_exact(b), b);
  EXPECT_THROW((IntPolynomial{1, 0, 1}.divide_exact(b)), Error);
}

TEST(CycInt, ZetaPowerWrapsAround) {
  EXPECT_EQ(CycInt::zeta_power(5, 5), CycInt::from_integer(5, 1));
  EXPECT_EQ(CycInt::zeta_power(5, -1), CycInt::zeta_power(5, 4));
  CycInt sum(7);
  for (int j = 0; j < 7; ++j) sum += CycInt::zeta_power(7, j);
  EXPECT_TRUE(sum.is_zero());
}

TEST(CycInt, CanonicalFormOfFifthRootExample) {
  // (1 + z)(1 + z^4) = 2 + z + z^4 = 1 - z^2 - z^3 in the basis 1, z, z^2, z^3
  CycInt one = CycInt::from_integer(5, 1);
  CycInt x = (one + CycInt::zeta_power(5, 1)) * (one + CycInt::zeta_power(5, 4));
  EXPECT_EQ(x, CycInt::from_coefficients(5, {1, 0, -1, -1}));
  EXPECT_EQ(x.as_rational_integer(), std::nullopt);
}

TEST(CycInt, MultiplicationMatchesComplexEmbedding) {
  for (unsigned m : {7u, 12u, 30u, 44u}) {
    std::vector<BigInt> a(m), b(m);
    for (unsigned i = 0; i < m; ++i) {
      a[i] = static_cast<long long>((i * 7 + 3) % 11) - 5;
      b[i] = static_cast<long long>((i * i + 1) % 9) - 4;
    }
    CycInt x = CycInt::from_group_ring(m, a), y = CycInt::from_group_ring(m, b);
    auto lhs = embed(x * y), rhs = embed(x) * embed(y);
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-7) << m;
  }
}

TEST(CycInt, GaloisIsEmbeddingChange) {
  unsigned m = 12;
  std::vector<BigInt> a{3, -1, 4, 1, -5, 9, 2, -6, 5, 3, -5, 8};
  CycInt x = CycInt::from_group_ring(m, a);
  for (unsigned u : units_mod(m)) EXPECT_NEAR(std::abs(embed(x.galois(u)) - embed(x, u)), 0.0, 1e-8);
  EXPECT_THROW(x.galois(2), InvalidArgument);
}

TEST(CycInt, GaloisIsRingHomomorphism) {
  unsigned m = 22;
  CycInt x = CycInt::from_coefficients(m, {1, 2, 0, -3, 1}), y = CycInt::from_coefficients(m, {0, -1, 5, 0, 0, 2});
  for (unsigned u : units_mod(m)) {
    EXPECT_EQ((x * y).galois(u), x.galois(u) * y.galois(u));
    EXPECT_EQ((x + y).galois(u), x.galois(u) + y.galois(u));
  }
  EXPECT_EQ(x.conj().conj(), x);
}

TEST(CycInt, SmallAndBigAgree) {
  auto x = SmallCycInt::from_coefficients(9, {1, -2, 3, 0, 4});
  auto y = SmallCycInt::from_coefficients(9, {0, 1, 1, -1});
  EXPECT_EQ((x * y).convert<BigInt>(), x.convert<BigInt>() * y.convert<BigInt>());
}

TEST(CycInt, MixedConductorThrows) {
  EXPECT_THROW(CycInt::from_integer(5, 1) + CycInt::from_integer(7, 1), ConductorMismatch);
}

TEST(OrbitProduct, FullOrbitIsRational) {
  // orbit of 1 + zeta_5 gives prod (1 - (1+z^u) T)
  std::vector<CycInt> vals;
  for (unsigned u : units_mod(5)) vals.push_back(CycInt::from_integer(5, 1) + CycInt::zeta_power(5, u));
  IntPolynomial p = orbit_product(vals);
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(p.coefficient(0), 1);
  // the reversed polynomial is the minimal polynomial of 1 + zeta_5: (x-1)^4 + ... + 1
  EXPECT_EQ(p.coefficient(4), 1);
  EXPECT_EQ(p.coefficient(1), -3);
}

TEST(OrbitProduct, PartialOrbitThrows) {
  std::vector<CycInt> vals{CycInt::zeta_power(5, 1)};
  EXPECT_THROW(orbit_product(vals), NonIntegralOrbit);
}
