#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "treelab/encoding.hpp"
#include "treelab/enumerate.hpp"
#include "treelab/errors.hpp"
#include "treelab/multiset.hpp"
#include "treelab/validate.hpp"

using namespace treelab;

namespace {

std::vector<int> mults(const Multiset& m) { return {m.multiplicities().begin(), m.multiplicities().end()}; }

}  // namespace

TEST(Integer, BasicValues) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(catalan(9), 4862);
  EXPECT_EQ(binomial(80, 40), Integer("107507208733336176461620"));
  Rational q(6, 4);
  q.canonicalize();
  EXPECT_EQ(to_string(q), "3/2");
  EXPECT_EQ(parse_rational("-7/14"), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  Rational r;
  EXPECT_TRUE(rational_sqrt(Rational(9, 4), r));
  EXPECT_EQ(r, Rational(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2), r));
}

TEST(Multiset, ParseAndRender) {
  const auto m = parse_multiset("1^2,2^4,3^3,4^2");
  EXPECT_EQ(m.cardinality(), 11);
  EXPECT_EQ(m.distinct_values(), 4);
  EXPECT_EQ(m.partial_sum(3), 9);
  EXPECT_EQ(m.to_string(), "1^2,2^4,3^3,4^2");
  EXPECT_EQ(parse_multiset(" 1^3 ").to_string(), "1^3");
  EXPECT_THROW(parse_multiset("1^0"), ParseError);
  EXPECT_THROW(parse_multiset("1^-1"), ParseError);
  EXPECT_THROW(parse_multiset("2^1"), ParseError);
  EXPECT_THROW(parse_multiset("1^1,3^1"), ParseError);
  EXPECT_THROW(parse_multiset(""), ParseError);
  EXPECT_THROW(parse_multiset("1^2,"), ParseError);
}

TEST(Multiset, Compositions) {
  for (int m = 1; m <= 8; ++m) {
    const auto cs = compositions(m);
    EXPECT_EQ(cs.size(), std::size_t{1} << (m - 1));
    for (std::size_t i = 1; i < cs.size(); ++i) EXPECT_LT(cs[i - 1], cs[i]);
    for (const auto& c : cs) EXPECT_EQ(c.cardinality(), m);
  }
}

TEST(CountFormula, KnownValues) {
  EXPECT_EQ(count_wit(Multiset::plane(3)), 5);
  EXPECT_EQ(count_wit(Multiset::distinct(2)), 2);
  EXPECT_EQ(count_wit(Multiset::distinct(6)), 720);
  EXPECT_EQ(count_wit(Multiset::plane(10)), catalan(10));
}

// Native enumeration (ordered shapes plus label assignment) against the
// library's binary-tree route, for every composition up to 6.
TEST(Enumeration, MatchesNativeOracle) {
  for (int m = 1; m <= 6; ++m) {
    for (const auto& ms : compositions(m)) {
      const auto expected = oracle::weakly_increasing_trees(mults(ms));
      const auto family = enumerate_wit(ms);
      std::set<std::string> got;
      for (const auto& t : family) got.insert(render(t));
      ASSERT_EQ(got.size(), family.size()) << ms.to_string();
      EXPECT_EQ(got, expected) << ms.to_string();
      EXPECT_EQ(Integer(static_cast<long>(expected.size())), count_wit(ms)) << ms.to_string();
    }
  }
}

TEST(Enumeration, SortedAndValid) {
  const auto m = parse_multiset("1^2,2^2,3^1");
  const auto family = enumerate_wit(m);
  for (std::size_t i = 1; i < family.size(); ++i) EXPECT_LT(render(family[i - 1]), render(family[i]));
  for (const auto& t : family) EXPECT_FALSE(validate_wit(t, m));
  const auto binaries = enumerate_wibt(m);
  EXPECT_EQ(binaries.size(), family.size());
  for (const auto& b : binaries) EXPECT_FALSE(validate_wibt(b, m));
}

TEST(Enumeration, BinaryShapesAreCatalan) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(Integer(static_cast<long>(binary_shapes(n).size())), catalan(static_cast<unsigned long>(n)));
  EXPECT_THROW(binary_shapes(0), DomainError);
}

TEST(Enumeration, TipAugmentedHasNoYoungInternal) {
  const auto m = Multiset::plane(4);
  for (const auto& t : enumerate_tip_augmented(m)) {
    const auto o = oracle::stats(oracle::parse(render(t)));
    EXPECT_EQ(o.counts.at("yint"), 0);
  }
}

TEST(Encoding, RoundTripPlane) {
  for (const auto& t : enumerate_wit(parse_multiset("1^2,2^1,3^2"))) {
    const auto s = render(t);
    EXPECT_EQ(render(parse_wit(s)), s);
    EXPECT_EQ(render(wit_from_json(to_json(t))), s);
  }
  EXPECT_EQ(render(parse_wit(" 0( 2 (3, 2(3)) ,1)")), "0(2(3,2(3)),1)");
}

TEST(Encoding, RoundTripBinary) {
  for (const auto& b : enumerate_wibt(parse_multiset("1^2,2^1,3^2"))) {
    const auto s = render(b);
    EXPECT_EQ(render(parse_binary(s)), s);
    EXPECT_EQ(render(binary_from_json(to_json(b))), s);
  }
  EXPECT_EQ(render(parse_binary("1(-;2)")), "1(-;2)");
}

TEST(Encoding, ParseErrorsCarryPositions) {
  try {
    parse_wit("0(1,,2)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_wit("0(1"), ParseError);
  EXPECT_THROW(parse_wit("0)"), ParseError);
  EXPECT_THROW(parse_wit(""), ParseError);
  EXPECT_THROW(parse_binary("1(2)"), ParseError);
  EXPECT_THROW(parse_binary("1(-;-;-)"), ParseError);
  EXPECT_THROW(parse_binary("-"), ParseError);
}

TEST(Validate, Violations) {
  EXPECT_FALSE(validate_wit(parse_wit("0(2(3,2(3)),1,1(3(4,4),2(2)))")));
  EXPECT_TRUE(validate_wit(parse_wit("1(1)")));        // root label
  EXPECT_TRUE(validate_wit(parse_wit("0(2(1))")));     // decrease along a path
  EXPECT_TRUE(validate_wit(parse_wit("0(1,2)")));      // siblings increase
  EXPECT_TRUE(validate_wit(parse_wit("0(1,3)")));      // 2 missing
  EXPECT_FALSE(validate_wit(parse_wit("0(1,1)"), Multiset::plane(2)));
  EXPECT_TRUE(validate_wit(parse_wit("0(1,1)"), Multiset::plane(3)));
  EXPECT_FALSE(validate_wibt(parse_binary("1(1;2)")));
  EXPECT_TRUE(validate_wibt(parse_binary("2(1;-)")));
  EXPECT_THROW(require_valid(parse_wit("0(1,2)")), DomainError);
  const auto lm = label_multiset(parse_wit("0(2(3,2(3)),1,1(3(4,4),2(2)))"));
  ASSERT_TRUE(lm);
  EXPECT_EQ(lm->to_string(), "1^2,2^4,3^3,4^2");
}

TEST(Trees, TagsAndStructure) {
  const auto t = parse_wit("0(2(3,2(3)),1,1(3(4,4),2(2)))");
  EXPECT_EQ(t.size(), 12u);
  for (int i = 0; i < static_cast<int>(t.size()); ++i) EXPECT_EQ(t.node(i).tag, i);
  EXPECT_EQ(t.find_tag(5), 5);
  EXPECT_EQ(t.find_tag(99), kNoNode);
  EXPECT_EQ(t.degree(0), 3);
  EXPECT_TRUE(t.is_rightmost_child(6));
  EXPECT_EQ(t.sibling_index(5), 1);
  const auto b = parse_binary("1(2;3)");
  EXPECT_EQ(b.node(0).tag, 1);
  EXPECT_TRUE(b.is_left_child(1));
  EXPECT_TRUE(b.is_right_child(2));
}
