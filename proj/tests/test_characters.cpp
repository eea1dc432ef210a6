#include <gtest/gtest.h>

#include <set>

#include "k3/characters.hpp"

using namespace k3;

namespace {

std::size_t brute_A_size(unsigned m) {
  std::size_t n = 0;
  for (unsigned a = 1; a < m; ++a)
    for (unsigned b = 1; b < m; ++b)
      for (unsigned c = 1; c < m; ++c)
        if ((a + b + c) % m != 0) ++n;
  return n;
}

}  // namespace

TEST(EnumerateA, SizeMatchesBruteForce) {
  for (unsigned m = 1; m <= 30; ++m) EXPECT_EQ(enumerate_A(m).size(), brute_A_size(m)) << m;
}

TEST(EnumerateA, FermatDegreeFourHas21) {
  // b2 of the Fermat quartic is 22 = 1 + |A_4|
  EXPECT_EQ(enumerate_A(4).size(), 21u);
}

TEST(EnumerateA, EntriesValid) {
  auto v = enumerate_A(6);
  EXPECT_EQ(std::set<CharacterVector>(v.begin(), v.end()).size(), v.size());
  for (const auto& c : v) {
    EXPECT_EQ((c.a[0] + c.a[1] + c.a[2] + c.a[3]) % 6, 0u);
    for (auto x : c.a) EXPECT_NE(x, 0u);
  }
}

TEST(CharacterVector, BracketDeterminesA0) {
  auto c = CharacterVector::from_bracket(44, {1, 22, 24});
  EXPECT_EQ(c.a[0], 41u);
  EXPECT_EQ(alpha_norm(c), 2);
  EXPECT_THROW(CharacterVector::from_bracket(4, {1, 1, 2}), InvalidArgument);  // a0 = 0
  EXPECT_THROW(CharacterVector::from_full(4, {1, 1, 1, 2}), InvalidArgument);
}

TEST(AlphaNorm, RangeAndSymmetry) {
  for (const auto& c : enumerate_A(9)) {
    int n = alpha_norm(c);
    EXPECT_GE(n, 1);
    EXPECT_LE(n, 3);
    EXPECT_EQ(alpha_norm(scale(c, 8)), 4 - n);  // complex conjugation
  }
}

TEST(Algebraic, FermatQuarticHasPicardTwenty) {
  // rho(F_4) = 1 + #B_4 = 20
  std::size_t b = 0;
  for (const auto& c : enumerate_A(4)) b += is_algebraic(c);
  EXPECT_EQ(b, 19u);
}

TEST(Algebraic, AllAlgebraicForSmallM) {
  for (unsigned m : {2u, 3u}) {
    for (const auto& c : enumerate_A(m)) EXPECT_TRUE(is_algebraic(c));
  }
}

TEST(Algebraic, ConjugatePairsAreAlgebraic) {
  // (a, a, -a, -a) is Hodge (1,1) under every Galois twist
  for (unsigned m : {5u, 7u, 12u})
    for (unsigned a = 1; a < m; ++a)
      EXPECT_TRUE(is_algebraic(CharacterVector::from_full(m, {a, a, -(long long)a, -(long long)a})));
  EXPECT_FALSE(is_algebraic(CharacterVector::from_full(12, {1, 1, 5, 5})));
}

TEST(GaloisOrbit, PartitionsA) {
  unsigned m = 10;
  std::set<CharacterVector> seen;
  std::size_t total = 0;
  for (const auto& c : enumerate_A(m)) {
    if (seen.count(c)) continue;
    auto o = galois_orbit(c);
    total += o.size();
    for (const auto& x : o) {
      EXPECT_TRUE(seen.insert(x).second);
      EXPECT_EQ(is_algebraic(x), is_algebraic(c));
    }
  }
  EXPECT_EQ(total, enumerate_A(m).size());
}

TEST(HodgeType, FollowsNorm) {
  auto c = CharacterVector::from_full(12, {1, 1, 5, 5});  // |alpha| = 1
  EXPECT_EQ(hodge_type(c), std::make_pair(0, 2));
  auto d = scale(c, 11);
  EXPECT_EQ(alpha_norm(d), 3);
  EXPECT_EQ(hodge_type(d), std::make_pair(2, 0));
}
