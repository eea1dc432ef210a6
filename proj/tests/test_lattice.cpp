#include <gtest/gtest.h>

#include "k3/lattice.hpp"

using namespace k3;

namespace {

KodairaSymbol K(const char* s) { return KodairaSymbol::parse(s); }

GramLattice E8m() { return standard_lattice("E8", {}, -1); }
GramLattice U() { return standard_lattice("U2"); }

}  // namespace

TEST(StandardLattice, Determinants) {
  for (long long n = 1; n <= 8; ++n)
    EXPECT_EQ(standard_lattice("A", {n}).determinant(), n + 1) << n;
  EXPECT_EQ(standard_lattice("E6").determinant(), 3);
  EXPECT_EQ(standard_lattice("E7").determinant(), 2);
  EXPECT_EQ(standard_lattice("E8").determinant(), 1);
  EXPECT_EQ(U().determinant(), -1);
  EXPECT_EQ(standard_lattice("E7", {}, -1).determinant(), -2);
}

TEST(StandardLattice, SignaturesAndLabels) {
  EXPECT_EQ(standard_lattice("E8").signature(), (Signature{8, 0}));
  EXPECT_EQ(E8m().signature(), (Signature{0, 8}));
  EXPECT_EQ(U().signature(), (Signature{1, 1}));
  auto s = direct_sum({U(), E8m(), E8m(), standard_lattice("A", {2}, -1)});
  EXPECT_EQ(s.rank(), 20u);
  EXPECT_EQ(s.signature(), (Signature{1, 19}));
  EXPECT_EQ(s.describe(), "U2 + -E8 + -E8 + -A2");
  EXPECT_EQ(s.determinant(), -3);
  EXPECT_TRUE(s.is_even());
}

TEST(StandardLattice, Errors) {
  EXPECT_THROW(standard_lattice("D4"), LatticeError);
  EXPECT_THROW(standard_lattice("A"), LatticeError);
  EXPECT_THROW(standard_lattice("U2", {}, 2), LatticeError);
  EXPECT_THROW(explicit_lattice({{2, 1}, {0, 2}}), LatticeError);
  EXPECT_THROW(explicit_lattice({{2, 1}}), LatticeError);
}

TEST(DiscriminantForm, RootLattices) {
  auto a2 = discriminant_form(standard_lattice("A", {2}));
  ASSERT_EQ(a2.orders, std::vector<long long>{3});
  EXPECT_EQ(a2.q[0], Rational(2, 3));
  EXPECT_TRUE(has_generator_with_value(a2, Rational(2, 3)));
  EXPECT_EQ(discriminant_form(standard_lattice("E8")).group_order(), 1);
  EXPECT_EQ(discriminant_form(standard_lattice("E7")).q[0], Rational(3, 2));
  EXPECT_THROW(discriminant_form(explicit_lattice({{1}})), LatticeError);
  EXPECT_THROW(discriminant_form(explicit_lattice({{0}})), LatticeError);
}

TEST(DiscriminantForm, EquivalenceUpToIsometry) {
  // E6 and A2 have isomorphic discriminant groups with opposite forms
  auto e6 = discriminant_form(standard_lattice("E6"));
  auto a2 = discriminant_form(standard_lattice("A", {2}));
  EXPECT_FALSE(fqf_equivalent(e6, a2));
  EXPECT_TRUE(fqf_equivalent(e6, a2.negated()));
  auto ma2 = discriminant_form(standard_lattice("A", {2}, -1));
  EXPECT_TRUE(fqf_equivalent(e6, ma2));
  // A1 + A1 vs U(2): same group, different forms
  auto a1a1 = discriminant_form(direct_sum({standard_lattice("A", {1}), standard_lattice("A", {1})}));
  auto u2 = discriminant_form(explicit_lattice({{0, 2}, {2, 0}}));
  EXPECT_EQ(a1a1.group_order(), u2.group_order());
  EXPECT_FALSE(fqf_equivalent(a1a1, u2));
}

TEST(DiscriminantForm, CyclicOfPrimeOrder) {
  auto t = explicit_lattice({{2, 1}, {1, -2}});  // det -5
  auto f = discriminant_form(t);
  ASSERT_EQ(f.orders, std::vector<long long>{5});
  int hits = 0;
  for (long long u = 1; u < 5; ++u) hits += f.value({u}) == f.value({1}) ? 1 : 0;
  EXPECT_EQ(hits, 2);  // +-1
}

TEST(Height, CorrectionTerms) {
  EXPECT_EQ(correction_term({K("IV*"), 1}), Rational(4, 3));
  EXPECT_EQ(correction_term({K("III*"), 1}), Rational(3, 2));
  EXPECT_EQ(correction_term({K("III"), 1}), Rational(1, 2));
  EXPECT_EQ(correction_term({K("IV"), 2}), Rational(2, 3));
  EXPECT_EQ(correction_term({K("I5"), 2}), Rational(6, 5));
  EXPECT_EQ(correction_term({K("II*"), 0}), Rational(0));
  EXPECT_THROW(correction_term({K("II*"), 1}), InvalidArgument);
  EXPECT_THROW(correction_term({K("III"), 2}), InvalidArgument);
  EXPECT_THROW(correction_term({K("I3"), 3}), InvalidArgument);
  EXPECT_THROW(height(SectionData{-1, {}}), InvalidArgument);
}

struct HeightCase {
  long long pai;
  std::vector<FiberContribution> contrib;
  std::vector<KodairaSymbol> fibers;
  Rational h;
  long long disc;
};

TEST(Height, FibrationTable) {
  std::vector<HeightCase> cases = {
      {3, {{K("III"), 1}}, {K("III")}, Rational(19, 2), 19},
      {0, {{K("III"), 1}, {K("IV"), 1}}, {K("III"), K("IV")}, Rational(17, 6), 17},
      {2, {{K("III*"), 1}}, {K("III*")}, Rational(13, 2), 13},
      {0, {{K("IV"), 1}, {K("III*"), 1}}, {K("IV"), K("III*")}, Rational(11, 6), 11},
      {0, {{K("IV*"), 1}, {K("III*"), 1}}, {K("IV*"), K("III*")}, Rational(7, 6), 7},
      {0, {{K("III*"), 1}, {K("II*"), 0}}, {K("III*"), K("II*")}, Rational(5, 2), 5},
  };
  for (const auto& c : cases) {
    Rational h = height(SectionData{c.pai, c.contrib});
    EXPECT_EQ(h, c.h);
    EXPECT_EQ(disc_from_height(h, c.fibers), c.disc);
  }
  EXPECT_EQ(signed_discriminant(19, 20), -19);
  EXPECT_EQ(signed_discriminant(19, 19), 19);
  EXPECT_THROW(disc_from_height(Rational(1, 3), {K("III")}), InvalidArgument);
}

TEST(Height, AgreesWithGramDeterminant) {
  // U + (-E7) + (-E8) + <-5>: a section of height 5 over III* and II*
  auto s = direct_sum({U(), standard_lattice("E7", {}, -1), E8m(), explicit_lattice({{-5}})});
  EXPECT_EQ(abs(s.determinant()), 10);
  EXPECT_EQ(disc_from_height(Rational(5), {K("III*"), K("II*")}), 10);
}

TEST(Nikulin, ComplementChecks) {
  auto s = direct_sum({U(), E8m(), E8m(), standard_lattice("A", {2}, -1)});
  auto t = standard_lattice("A", {2});
  EXPECT_TRUE(nikulin_complement_check(s, t).ok);
  EXPECT_EQ(nikulin_complement_check(s, standard_lattice("A", {3})).failure, "rank");
  EXPECT_EQ(nikulin_complement_check(s, standard_lattice("A", {2}, -1)).failure, "signature");
  auto s2 = direct_sum({U(), E8m(), E8m(), standard_lattice("A", {1}, -1), standard_lattice("A", {1}, -1)});
  auto t2 = direct_sum({standard_lattice("A", {1}), standard_lattice("A", {1})});
  EXPECT_TRUE(nikulin_complement_check(s2, t2).ok);
  auto s3 = direct_sum({U(), E8m(), E8m(), explicit_lattice({{0, 2}, {2, 0}})});
  auto t3 = direct_sum({standard_lattice("diag", {2}), standard_lattice("diag", {2})});
  // U(2) is indefinite, so the pair already fails on signature
  EXPECT_FALSE(nikulin_complement_check(s3, t3).ok);
}

TEST(Mirror, VisibleSummand) {
  auto t = direct_sum({U(), U(), standard_lattice("A", {2}, -1)});
  auto m = mirror_split(t);
  ASSERT_TRUE(m.exists);
  EXPECT_EQ(m.method, "visible-summand");
  EXPECT_EQ(m.complement->describe(), "U2 + -A2");
}

TEST(Mirror, EmbeddingTrick) {
  auto t = direct_sum({standard_lattice("diag", {2}), standard_lattice("A", {2}, -1)});
  auto m = mirror_split(t);
  ASSERT_TRUE(m.exists);
  EXPECT_EQ(m.method, "embedding");
  ASSERT_EQ(m.complement->rank(), 1u);
  EXPECT_EQ(m.complement->gram()[0][0], -6);
  auto e = embedding_check_hyperbolic();
  EXPECT_TRUE(e.is_hyperbolic_plane);
}

TEST(Mirror, SearchAndDefinite) {
  auto t = explicit_lattice({{0, 1, 0}, {1, 0, 0}, {0, 0, -4}});
  auto m = mirror_split(t);
  ASSERT_TRUE(m.exists);
  EXPECT_EQ(m.method, "search");
  EXPECT_EQ(m.complement->gram()[0][0], -4);
  auto none = mirror_split(standard_lattice("A", {2}));
  EXPECT_FALSE(none.exists);
  EXPECT_EQ(none.reason, "T_X positive definite");
  EXPECT_EQ(mirror_split(standard_lattice("A", {2}, -1)).reason, "T_X negative definite");
}
