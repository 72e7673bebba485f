#include <gtest/gtest.h>

#include <random>

#include "treelab/distribution.hpp"
#include "treelab/enumerate.hpp"
#include "treelab/errors.hpp"
#include "treelab/generating_functions.hpp"
#include "treelab/integer.hpp"
#include "treelab/permutation.hpp"
#include "treelab/polynomial.hpp"
#include "treelab/series.hpp"
#include "treelab/tree_stats.hpp"

using namespace treelab;

namespace {

Polynomial V(const char* n) { return Polynomial::variable(n); }
Polynomial C(long c) { return Polynomial::constant(Rational(c)); }

// n! [t^n] s
Polynomial egf_coeff(const TruncatedSeries& s, int n) { return s[n] * Rational(factorial(static_cast<unsigned long>(n))); }

// Random series in t over Q[a, b] with the given constant term.
TruncatedSeries random_series(std::mt19937& rng, int order, long c0) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(0, 2);
  TruncatedSeries s(order);
  s[0] = C(c0);
  for (int n = 1; n <= order; ++n) {
    Polynomial p({"a", "b"});
    for (int k = 0; k < 3; ++k) p.add_term({ex(rng), ex(rng)}, Rational(coef(rng)));
    s[n] = p;
  }
  return s;
}

}  // namespace

TEST(Polynomial, ArithmeticAndPrinting) {
  const auto p = V("x") + V("y");
  EXPECT_EQ(to_string(p.pow(2)), "x^2 + 2*x*y + y^2");
  EXPECT_EQ(to_string(p - p), "0");
  EXPECT_EQ(to_string(V("x") - C(1)), "-1 + x");
  EXPECT_EQ(to_string(p * Rational(1, 2)), "1/2*x + 1/2*y");
  EXPECT_TRUE(V("x") * V("y") == V("y") * V("x"));
  EXPECT_EQ(p.pow(3).coefficient_sum(), 8);
  EXPECT_EQ((p.pow(3)).degree_in("y"), 3);
  EXPECT_EQ(p.substitute({{"y", V("x")}}), V("x") * Rational(2));
  EXPECT_EQ(p.pow(2).evaluate({{"x", 1}, {"y", 2}}), 9);
  EXPECT_THROW(p.evaluate({{"x", 1}}), DomainError);
  EXPECT_FALSE((p * Rational(1, 2)).is_integral());
}

TEST(Polynomial, ParseCompactForms) {
  EXPECT_EQ(parse_polynomial("u_2v_1^2v_2 + 2u_1"), V("u2") * V("v1").pow(2) * V("v2") + V("u1") * Rational(2));
  EXPECT_EQ(parse_polynomial("x*z1 + y*z2"), V("x") * V("z1") + V("y") * V("z2"));
  EXPECT_EQ(parse_polynomial("3/2*x - 1"), V("x") * Rational(3, 2) - C(1));
  const auto q = parse_polynomial("1 + x^2 - 7*x*y^3");
  EXPECT_EQ(parse_polynomial(to_string(q)), q);
  EXPECT_THROW(parse_polynomial("x +"), ParseError);
  EXPECT_THROW(parse_polynomial("x^"), ParseError);
}

TEST(Polynomial, JsonShape) {
  const auto j = to_json(V("x") * Rational(3, 2) + C(1));
  EXPECT_EQ(j["variables"], nlohmann::ordered_json::array({"x"}));
  EXPECT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][1][1], "3/2");
}

TEST(Series, SqrtSquaresBack) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = random_series(rng, 12, 1);
    const auto r = s.sqrt();
    EXPECT_TRUE(r * r == s);
  }
  EXPECT_TRUE((TruncatedSeries::constant(C(9), 4) + TruncatedSeries::t(4)).sqrt()[0] == C(3));
  EXPECT_THROW((TruncatedSeries::constant(C(2), 4)).sqrt(), DomainError);
}

TEST(Series, ExpDerivativeLaw) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_series(rng, 10, 0);
    const auto e = f.exp();
    EXPECT_TRUE(e.derivative() == f.derivative() * e);
  }
  EXPECT_THROW(TruncatedSeries::constant(C(1), 3).exp(), DomainError);
}

TEST(Series, IntegralDerivativeInverse) {
  std::mt19937 rng(3);
  const auto f = random_series(rng, 10, 0);
  EXPECT_TRUE(f.integral().derivative() == f);
  const auto g = random_series(rng, 10, 2);
  const auto one = g * g.inverse();
  EXPECT_TRUE(one == TruncatedSeries::constant(C(1), 10));
  EXPECT_THROW(f.inverse(), DomainError);
  EXPECT_TRUE((f * TruncatedSeries::t(10)).divide_by_t().truncated(9) == f.truncated(9));
  EXPECT_THROW(g.divide_by_t(), ConsistencyError);
}

TEST(Counting, NarayanaNumbers) {
  EXPECT_EQ(refined_narayana_count(3, 1, 1), 2);
  EXPECT_EQ(refined_narayana_count(3, 1, 0), 1);
  EXPECT_EQ(refined_narayana_count(3, 1, 2), 1);
  EXPECT_EQ(refined_narayana_count(3, 2, 0), 1);
  for (long n = 1; n <= 10; ++n) {
    EXPECT_EQ(narayana(n, 1), 1);
    Integer total = 0;
    for (long k = 1; k <= n; ++k) total += narayana(n, k);
    EXPECT_EQ(total, catalan(static_cast<unsigned long>(n)));
  }
  EXPECT_THROW(narayana(0, 1), DomainError);
}

TEST(Counting, Motzkin) {
  const auto u = Polynomial::variable("u", {"u", "v"}), v = Polynomial::variable("v", {"u", "v"});
  EXPECT_EQ(motzkin_poly(0), u);
  EXPECT_EQ(motzkin_poly(1), u * v);
  EXPECT_EQ(motzkin_poly(2), u * u + u * v * v);
}

TEST(NarayanaGf, ClosedFixedPointAndEnumerationAgree) {
  const int K = 8;
  const auto closed = narayana_gf_closed(K);
  const auto fixed = narayana_gf_fixedpoint(K);
  EXPECT_TRUE(closed == fixed);
  EXPECT_EQ(closed[1], V("u1"));
  using Kd = StatisticId::Kind;
  const std::vector<StatisticId> stats{{Kd::sleaf}, {Kd::etleaf}, {Kd::entleaf}, {Kd::yerleaf}, {Kd::syleaf}};
  for (int n = 2; n <= K; ++n) {
    const auto fam = enumerate_plane_trees(n);
    EXPECT_EQ(closed[n], distribution_polynomial(fam, stats)) << n;
    std::map<std::string, Rational> ones{{"u1", 1}, {"u2", 1}, {"u3", 1}, {"v1", 1}, {"v2", 1}};
    EXPECT_EQ(closed[n].evaluate(ones), Rational(catalan(static_cast<unsigned long>(n))));
  }
  EXPECT_EQ(closed[2], parse_polynomial("u1 + u2*v2"));
}

TEST(Eulerian, SmallCasesAndRecurrence) {
  EXPECT_EQ(eulerian_refined(1), V("z1"));
  EXPECT_EQ(eulerian_refined(2), parse_polynomial("x*z1 + y*z2"));
  EXPECT_EQ(eulerian_refined(3), parse_polynomial("x^2*z1 + x*y*z1 + x*y*z2 + y^2*z2 + 2*z1*z2"));
  std::vector<Polynomial> A{Polynomial{}};
  for (int n = 1; n <= 7; ++n) A.push_back(eulerian_refined(n));
  for (int n = 4; n <= 7; ++n) EXPECT_EQ(eulerian_recurrence(n, A), A[static_cast<std::size_t>(n)]) << n;
  EXPECT_TRUE(riccati_residual(7).is_zero());
  std::map<std::string, Rational> ones{{"x", 1}, {"y", 1}, {"z1", 1}, {"z2", 1}};
  for (int n = 1; n <= 7; ++n)
    EXPECT_EQ(A[static_cast<std::size_t>(n)].evaluate(ones), Rational(factorial(static_cast<unsigned long>(n))));
}

TEST(Pk1, ClosedFormMatchesBruteForce) {
  const auto s = pk1_egf_closed(7);
  EXPECT_TRUE(s[0].is_zero());
  EXPECT_EQ(egf_coeff(s, 1), V("z"));
  EXPECT_EQ(egf_coeff(s, 2), C(1) + V("z"));
  EXPECT_EQ(egf_coeff(s, 3), C(2) + V("z") * Rational(4));
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(egf_coeff(s, n), pk1_distribution(n)) << n;
    EXPECT_EQ(egf_coeff(s, n).evaluate({{"z", 1}}), Rational(factorial(static_cast<unsigned long>(n))));
  }
}

TEST(ElizaldeNoy, ConsecutivePatternCounts) {
  const auto s = elizalde_noy_egf(7);
  EXPECT_EQ(egf_coeff(s, 0), C(1));
  EXPECT_EQ(egf_coeff(s, 1), C(1));
  EXPECT_EQ(egf_coeff(s, 2), C(2));
  EXPECT_EQ(consecutive132_distribution(3), C(5) + V("z"));
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(egf_coeff(s, n), consecutive132_distribution(n)) << n;
}

TEST(Corollary34, MultinomialHoldsBinomialDoesNot) {
  std::vector<Polynomial> B;
  for (int n = 0; n <= 7; ++n) B.push_back(n == 0 ? C(1) : consecutive132_distribution(n));
  const auto lhs3 = pk1_distribution(3);
  EXPECT_EQ(lhs3, C(2) + V("z") * Rational(4));
  EXPECT_EQ(pk1_from_132_rhs(3, Pk1Form::multinomial, B), lhs3);
  EXPECT_EQ(pk1_from_132_rhs(3, Pk1Form::binomial, B), C(1) * Rational(7, 2) + V("z") * Rational(5, 2));
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(pk1_from_132_rhs(n, Pk1Form::multinomial, B), pk1_distribution(n)) << n;
}

TEST(CarlitzScoville, RationalRoots) {
  const auto s = carlitz_scoville_series(1, 4, 6, 6);
  EXPECT_EQ(egf_coeff(s, 1), C(6));
  EXPECT_EQ(egf_coeff(s, 2), C(30));
  EXPECT_EQ(egf_coeff(s, 3), C(222));
  std::map<std::string, Rational> at{{"x", 1}, {"y", 4}, {"z1", 6}, {"z2", 6}};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(egf_coeff(s, n).as_constant().value(), eulerian_refined(n).evaluate(at)) << n;
  EXPECT_THROW(carlitz_scoville_series(1, 1, Rational(1, 4), 4), DomainError);  // u = v
  EXPECT_THROW(carlitz_scoville_series(1, 1, 1, 4), DomainError);               // irrational roots
}
