#include <gtest/gtest.h>

#include "frobpow/oracle.hpp"
#include "helpers.hpp"

using namespace frobpow;
using frobpow::oracle::InvariantQuery;
using frobpow::testing::I;

namespace {

std::int64_t mu(const std::string& a, const std::string& b, std::int64_t q, std::int64_t p) {
  return oracle::mu(InvariantQuery(I(a), I(b), q, p));
}

std::int64_t nu(const std::string& a, const std::string& b, std::int64_t q, std::int64_t p) {
  return oracle::nu(InvariantQuery(I(a), I(b), q, p));
}

}  // namespace

TEST(Query, Validation) {
  EXPECT_THROW(InvariantQuery(I("x1"), I("x1"), 9, 3 * 2), ValidationError);
  EXPECT_THROW(InvariantQuery(I("x1, x2"), I("x1, x2"), 10, 5), ValidationError);
  EXPECT_THROW(InvariantQuery(I("x1, x2"), I("x1"), 5, 5), ValidationError);  // x2 not in rad
  EXPECT_THROW(InvariantQuery(MonomialIdeal::unit(2), I("x1, x2"), 5, 5), ValidationError);
  EXPECT_THROW(InvariantQuery(MonomialIdeal::zero(2), I("x1, x2"), 5, 5), ValidationError);
  EXPECT_THROW(InvariantQuery(I("x1"), I("x1, x2", 3), 5, 5), ValidationError);
}

TEST(RadicalExponent, Values) {
  EXPECT_EQ(oracle::radical_exponent(I("x1*x2"), I("x1^3, x2^2")), 2);
  EXPECT_EQ(oracle::radical_exponent(I("x1^2, x2"), I("x1^3, x2^5")), 5);
  EXPECT_FALSE(oracle::radical_exponent(I("x1, x2"), I("x1^2")).has_value());
}

TEST(Mu, MaximalIdealPower) {
  EXPECT_EQ(mu("m^7(3)", "x1, x2, x3", 13, 13), 5);
  EXPECT_EQ(mu("m^7(3)", "x1, x2, x3", 169, 13), 72);
}

TEST(Mu, SelfIsQMinusOne) {
  for (std::int64_t q : {3, 9, 27}) EXPECT_EQ(mu("x1, x2^2", "x1, x2^2", q, 3), q - 1);
  EXPECT_EQ(mu("x1", "x1", 25, 5), 24);
}

TEST(Mu, MinComparison) {
  // a inside b, q = p: mu = min(nu, p - 1).
  EXPECT_EQ(mu("x1^2, x2^2", "x1, x2", 5, 5), 4);
  EXPECT_EQ(nu("x1^2, x2^2", "x1, x2", 5, 5), 4);
  EXPECT_EQ(mu("x1, x2", "x1, x2", 7, 7), 6);
  EXPECT_EQ(mu("x1^3*x2^3", "x1, x2", 7, 7), std::min<std::int64_t>(nu("x1^3*x2^3", "x1, x2", 7, 7), 6));
}

TEST(Nu, RegularPowers) {
  EXPECT_EQ(nu("m^7(3)", "x1, x2, x3", 13, 13), 5);
  EXPECT_EQ(nu("x1", "x1", 7, 7), 6);
  EXPECT_EQ(nu("m^7(3)", "x1^2, x2, x3", 13, 13), (4 * 13 - 3) / 7);
}

TEST(Search, CapExhaustion) {
  const InvariantQuery q(I("x1, x2"), I("x1, x2"), 49, 7);
  EXPECT_THROW(oracle::mu(q, oracle::OracleConfig{10}), ResourceError);
  EXPECT_EQ(oracle::mu(q, oracle::OracleConfig{100}), 48);
}

TEST(Truncations, MaximalIdealPower) {
  const auto t = oracle::crit_truncations(I("m^7(3)"), I("x1, x2, x3"), 13, 2);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0], Rational(5, 13));
  EXPECT_EQ(t[1], Rational(72, 169));
}

TEST(Truncations, SelfContained) {
  const auto t = oracle::crit_truncations(I("x1^2, x2"), I("x1^2, x2"), 3, 3);
  EXPECT_EQ(t, (std::vector<Rational>{Rational(2, 3), Rational(8, 9), Rational(26, 27)}));
}

TEST(Truncations, FirstEntryAtLeastOneOverP) {
  // a not inside b^[p] forces mu(p) >= 1.
  const auto t = oracle::crit_truncations(I("x1, x2"), I("x1^2, x2^3"), 5, 1);
  EXPECT_GE(t[0], Rational(1, 5));
}

TEST(MuDiagFast, SingleVariableReturnsCap) {
  const auto cap = oracle::diag_mu_cap({3}, 169, 7);
  EXPECT_EQ(cap, (ExponentVector{(3 * 169 - lpr(3 * 169, 7)) / 7}));
  EXPECT_EQ(oracle::mu_diag_fast({3}, 169, 7, 13), cap[0]);
  EXPECT_EQ(oracle::mu_diag_fast({5}, 41, 7, 41), (5 * 41 - lpr(5 * 41, 7)) / 7);
}

TEST(MuDiagFast, MatchesOracle) {
  const std::int64_t p = 41;
  for (const ExponentVector u : {ExponentVector{1, 1, 1}, ExponentVector{2, 3, 1}, ExponentVector{1, 1, 5}}) {
    const auto direct = oracle::mu(InvariantQuery(diag({7, 7, 7}), diag(u), p, p));
    EXPECT_EQ(oracle::mu_diag_fast(u, p, 7, p), direct) << u.to_string();
  }
}

TEST(MuDiagFast, DegenerateIsQMinusOne) {
  // |u| > d: mu(u, p^e) = p^e - 1.
  EXPECT_EQ(oracle::mu_diag_fast({3, 3, 3}, 41, 7, 41), 40);
  EXPECT_EQ(oracle::mu_diag_fast({7, 7, 7}, 41 * 41, 7, 41), 41 * 41 - 1);
}

TEST(Escape, Caches) {
  oracle::FrobeniusEscape esc(I("x1, x2"), I("x1^7, x2^7"), 7);
  EXPECT_TRUE(esc.escapes(6));
  EXPECT_FALSE(esc.escapes(7));
  EXPECT_FALSE(esc.escapes(12));
  EXPECT_TRUE(esc.escapes(6));
}
