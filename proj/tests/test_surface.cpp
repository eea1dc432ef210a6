#include <gtest/gtest.h>

#include "k3/surface.hpp"

using namespace k3;

TEST(Parser, WeierstrassEquation) {
  auto s = parse_surface("y^2 = x^3 + x + t^11");
  ASSERT_EQ(s.variables, (std::vector<std::string>{"y", "x", "t"}));
  ASSERT_EQ(s.terms.size(), 4u);
  EXPECT_EQ(s.terms[0].coefficient, -1);
  EXPECT_EQ(s.terms[0].exponents, (Exponent3{2, 0, 0}));
}

TEST(Parser, ExpandsProducts) {
  auto a = parse_surface("y^2 = x^3 - t*(t^11 + 1)");
  auto b = parse_surface("y^2 = x^3 - t^12 - t");
  EXPECT_EQ(a.terms, b.terms);
  auto c = parse_surface("y^2 = x^3 + t^5*(t - 1)^2");
  EXPECT_EQ(c.terms.size(), 5u);
}

TEST(Parser, ImplicitMultiplicationAndNegativeExponents) {
  auto a = parse_surface("w = 2u v^-2 + u^(-1)");
  ASSERT_EQ(a.terms.size(), 3u);
  auto b = parse_surface("w = 2*u*v^(-2) + u^-1");
  EXPECT_EQ(a.terms, b.terms);
}

TEST(Parser, CombinesLikeTerms) {
  auto s = parse_surface("y^2 = x^3 + x + x - 2*x + 1");
  EXPECT_EQ(s.terms.size(), 3u);
}

TEST(Parser, CoefficientsAndToString) {
  auto s = parse_surface("3*y^2 = x^3 - 7");
  EXPECT_EQ(s.to_string(), "-3*y^2 + x^3 - 7 = 0");
  // "... = 0" reparses as 0 - (...), so every coefficient flips
  auto back = parse_surface(s.to_string()).terms;
  for (auto& t : back) t.coefficient = -t.coefficient;
  EXPECT_EQ(back, s.terms);
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_surface("y^2 = x^3 + a*b"), InvalidArgument);
  EXPECT_THROW(parse_surface("y^2 = x^3 +"), ParseError);
  EXPECT_THROW(parse_surface("y^2 = (x + 1)^-1"), ParseError);
  EXPECT_THROW(parse_surface("y^2 = x^^3"), ParseError);
  EXPECT_THROW(parse_surface("y^2 = x^3 + u*v*w"), ParseError);
  EXPECT_NO_THROW(parse_surface("y^2 x^3"));  // no equals sign: polynomial = 0
  try {
    parse_surface("y^2 = x^3 + $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 12u);
  }
}
