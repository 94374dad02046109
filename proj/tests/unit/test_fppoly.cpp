#include <gtest/gtest.h>

#include "frobpow/fppoly.hpp"
#include "helpers.hpp"

using namespace frobpow;
using frobpow::testing::I;

namespace {

FpPolynomial poly(const std::string& text, std::int64_t p, std::size_t n = 0) { return parse_polynomial(text, p, n); }

}  // namespace

TEST(FpPolynomial, Construction) {
  FpPolynomial f(7, 2);
  EXPECT_TRUE(f.is_zero());
  f.add_term({1, 0}, 3);
  f.add_term({1, 0}, 4);
  EXPECT_TRUE(f.is_zero());
  f.add_term({0, 2}, -1);
  EXPECT_EQ(f.terms().at(ExponentVector{0, 2}), 6);
  EXPECT_THROW(f.add_term({1}, 1), ValidationError);
  EXPECT_THROW(FpPolynomial(8, 2), ValidationError);
}

TEST(FpPolynomial, Printing) {
  EXPECT_EQ(poly("x1^3 + 2*x2^4 + x3^5", 7).to_string(), "x1^3 + 2*x2^4 + x3^5");
  EXPECT_EQ(FpPolynomial::constant(5, 2, 3).to_string(), "3");
  EXPECT_EQ(FpPolynomial(5, 2).to_string(), "0");
}

TEST(FpPolynomial, Diagonal) {
  EXPECT_TRUE(poly("x1^3 + 2*x2^4 + x3^5", 7).is_diagonal());
  EXPECT_FALSE(poly("x1*x2 + x2^4", 7).is_diagonal());
  EXPECT_FALSE(poly("x1^2 + 3*x1^5", 7).is_diagonal());
  EXPECT_TRUE(poly("x1 + x2", 2).is_diagonal());
}

TEST(Powers, Frobenius) {
  EXPECT_EQ(poly_pow(poly("x1 + x2", 2), 2), poly("x1^2 + x2^2", 2));
  EXPECT_EQ(poly_pow(poly("x1^2 + x2^3", 7), 3), poly("x1^6 + 3*x1^4*x2^3 + 3*x1^2*x2^6 + x2^9", 7));
  EXPECT_EQ(poly_pow(poly("x1 + x2", 5), 0), FpPolynomial::constant(5, 2, 1));
}

TEST(Powers, RoutesAgree) {
  const auto g = poly("x1^2 + 3*x2^3 + x3", 5);
  for (std::int64_t m : {0, 1, 4, 5, 7, 24, 26}) EXPECT_EQ(poly_pow_multinomial(g, m), poly_pow_squaring(g, m)) << m;
}

TEST(Powers, LucasTermCount) {
  const auto g = poly("x1^2 + x2^3", 7);
  for (std::int64_t m = 0; m <= 60; ++m) {
    std::size_t expected = 0;
    for (std::int64_t a = 0; a <= m; ++a) expected += carry_free({a, m - a}, 7) ? 1 : 0;
    EXPECT_EQ(poly_pow(g, m).size(), expected) << m;
  }
}

TEST(Powers, Budget) {
  EXPECT_THROW(poly_pow_squaring(poly("x1 + x2 + x3 + 1", 101), 40, PolyBudget{100}), ResourceError);
}

TEST(Bracket, RaisesExponents) {
  EXPECT_EQ(bracket(poly("x1 + 2*x2^2", 5), 5), poly("x1^5 + 2*x2^10", 5));
}

TEST(Roots, Principal) {
  const auto b = frob_root_principal(poly("x1^5*x2^3", 3), 3);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].residue, (ExponentVector{2, 0}));
  EXPECT_EQ(b[0].root, poly("x1*x2", 3));
}

TEST(Roots, ConstantBucketGivesUnit) {
  const auto b = frob_root_principal(poly("x1^7 + x1", 7), 7);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].root, poly("x1", 7));
  EXPECT_EQ(b[1].root, FpPolynomial::constant(7, 1, 1));
  EXPECT_THROW(frob_root_principal(poly("x1", 7), 6), ValidationError);
}

TEST(TestIdeal, DiagonalExamples) {
  const auto g = poly("x1^2 + x2^3", 7);
  const auto tau = test_ideal(g, 6, 7);
  ASSERT_TRUE(tau.monomial.has_value());
  EXPECT_EQ(*tau.monomial, I("x1, x2"));
  for (const auto& bucket : tau.buckets) EXPECT_TRUE(bucket.root.is_term());
  EXPECT_TRUE(test_ideal(g, 0, 7).monomial->is_unit());
}

TEST(TestIdeal, MatchesFrobeniusPowers) {
  const auto g = poly("x1^3 + 2*x2^4 + x3^5", 7);
  for (std::int64_t m : {1, 17, 30, 38, 45, 48}) {
    const auto tau = test_ideal(g, m, 49);
    ASSERT_TRUE(tau.monomial.has_value());
    EXPECT_EQ(*tau.monomial, frob_power_rational(diag({3, 4, 5}), m, 49, 7)) << m;
  }
}

TEST(TestIdeal, NonMonomialRoot) {
  // (x + y)^8 = x^8 + x^7 y + x y^7 + y^8: both buckets have root x + y.
  const auto tau = test_ideal(poly("x1 + x2", 7), 8, 7);
  EXPECT_FALSE(tau.monomial.has_value());
}
