#include <gtest/gtest.h>

#include <set>

#include "treelab/bijections.hpp"
#include "treelab/encoding.hpp"
#include "treelab/enumerate.hpp"
#include "treelab/errors.hpp"
#include "treelab/tree_stats.hpp"

using namespace treelab;

namespace {

const char* const kSample = "0(2(3,2(3)),1,1(3(4,4),2(2)))";
const char* const kSampleImage = "1(1(2(-;2(3;3));-);2(3(-;4(4;-));2))";
const char* const kTenNodes = "0(7(10,8(9)),6,1(3(5,4),2))";

std::vector<int> indices(const std::vector<NodeRef>& v) {
  std::vector<int> out;
  for (auto r : v) out.push_back(r.index);
  return out;
}

std::set<int> labels(const LabeledBinaryTree& b, const std::vector<NodeRef>& v) {
  std::set<int> out;
  for (auto r : v) out.insert(b.node(r.index).label);
  return out;
}

std::vector<WeaklyIncreasingTree> small_families() {
  std::vector<WeaklyIncreasingTree> out;
  for (int m = 1; m <= 6; ++m)
    for (const auto& ms : compositions(m)) {
      auto f = enumerate_wit(ms);
      out.insert(out.end(), f.begin(), f.end());
    }
  return out;
}

}  // namespace

TEST(Rho, SampleTree) {
  const auto t = parse_wit(kSample);
  EXPECT_EQ(render(rho(t)), kSampleImage);
  EXPECT_EQ(render(rho_inv(parse_binary(kSampleImage))), kSample);
}

TEST(Rho, RoundTripAndTags) {
  for (const auto& t : small_families()) {
    const auto b = rho(t);
    EXPECT_EQ(b.size() + 1, t.size());
    EXPECT_TRUE(rho_inv(b) == t) << render(t);
    for (int i = 1; i < static_cast<int>(t.size()); ++i) EXPECT_NE(b.find_tag(t.node(i).tag), kNoNode);
  }
}

TEST(Rho, SmallCases) {
  EXPECT_EQ(render(rho(parse_wit("0(1)"))), "1");
  EXPECT_EQ(render(rho(parse_wit("0(1,1)"))), "1(1;-)");
  EXPECT_EQ(render(rho(parse_wit("0(1(1))"))), "1(-;1)");
  EXPECT_THROW(rho(parse_wit("0(1,2)")), DomainError);
}

TEST(Phi, TenNodeTree) {
  EXPECT_EQ(render(Phi(parse_wit(kTenNodes))), "0(2(4(5),3),1(6(9,8(10),7)))");
  EXPECT_EQ(render(rho(Phi(parse_wit(kTenNodes)))), "1(2(-;3(4(-;5);-));6(-;7(8(9;10);-)))");
  EXPECT_EQ(render(Phi(parse_wit("0(1,1)"))), "0(1(1))");
}

TEST(Phi, InvolutionAndSwaps) {
  for (const auto& t : small_families()) {
    if (t.size() < 3) continue;
    const auto p = Phi(t);
    ASSERT_TRUE(Phi(p) == t) << render(t);
    const auto a = wit_stats(t), b = wit_stats(p);
    EXPECT_EQ(a.sleaf, b.eleaf);
    EXPECT_EQ(a.yleaf, b.yint);
  }
}

TEST(Switch, Primitives) {
  const auto b = parse_binary("1(2(3;-);4)");
  EXPECT_EQ(render(switch_at(b, NodeRef{0})), "1(4;2(3;-))");
  EXPECT_EQ(render(switch_set(b, {NodeRef{0}, NodeRef{1}})), "1(4;2(-;3))");
  EXPECT_EQ(render(mirror(mirror(b))), render(b));
  EXPECT_THROW(switch_at(b, NodeRef{4}), DomainError);
  EXPECT_THROW(switch_at(b, NodeRef{-1}), DomainError);
}

TEST(Psi, UnbalancedNodes) {
  const auto b = parse_binary("1(8(10(11;-);9);2(4(5(7;6);-);3))");
  EXPECT_EQ(indices(unbalanced_set(b)), (std::vector<int>{1, 5}));
  EXPECT_EQ(render(psi(b)), "1(8(9;10(11;-));2(3;4(5(7;6);-)))");
  EXPECT_EQ(render(psi(parse_binary("1(2(3;-);4)"))), "1(4;2(3;-))");
}

TEST(Psi, InvolutionOnTrees) {
  for (const auto& t : small_families()) {
    if (t.size() < 3) continue;
    const auto p = Psi(t);
    ASSERT_TRUE(Psi(p) == t);
    const auto a = wit_stats(t), b = wit_stats(p);
    EXPECT_EQ(a.suleaf, b.entleaf);
    EXPECT_EQ(a.yint, b.yint);
  }
}

TEST(Varphi, OneBasedAndOrbits) {
  const auto b = parse_binary("1(2(3;-);4)");
  EXPECT_EQ(render(varphi(b, 2)), "1(2(-;3);4)");
  EXPECT_EQ(render(varphi(b, 1)), render(b));  // two children: unchanged
  EXPECT_THROW(varphi(b, 0), DomainError);
  EXPECT_THROW(varphi(b, 5), DomainError);
  EXPECT_EQ(render(orbit_canonical(parse_binary("1(-;2(-;3))"))), "1(2(3;-);-)");
}

TEST(Orbits, SizeIsPowerOfSingleChildCount) {
  const auto family = enumerate_wibt(parse_multiset("1^2,2^2,3^1"));
  std::map<std::string, int> sizes;
  for (const auto& b : family) ++sizes[render(orbit_canonical(b))];
  for (const auto& [key, size] : sizes) {
    const auto rep = parse_binary(key);
    int single = 0;
    for (int i = 0; i < static_cast<int>(rep.size()); ++i) single += rep.child_count(i) == 1;
    EXPECT_EQ(size, 1 << single) << key;
  }
}

TEST(Theta, HeadsAndLevels) {
  const auto t = parse_wit(kTenNodes);
  const auto b = rho(t);
  const auto th = theta(b);
  EXPECT_EQ(labels(b, heads(b)), (std::set<int>{1, 2, 4, 8, 9}));
  EXPECT_EQ(labels(th, odd_right_level_set(th)), (std::set<int>{1, 2, 4, 8, 9}));
  EXPECT_EQ(render(th), "1(2(-;3(-;4(-;5)));6(7(-;8(9;10));-))");
  EXPECT_EQ(render(Theta(t)), "0(2(3(4(5))),1(7(9,8(10)),6))");
  EXPECT_EQ(render(theta_inv(th)), render(b));
  EXPECT_EQ(render(Theta(parse_wit("0(1,1)"))), "0(1(1))");
}

TEST(Theta, EqualsRecursiveHatAndInverts) {
  for (const auto& t : small_families()) {
    const auto h = Theta(t);
    EXPECT_TRUE(hat_recursive(t) == h) << render(t);
    EXPECT_TRUE(Theta_inv(h) == t) << render(t);
  }
}

TEST(PartnerMap, TenNodeTree) {
  const auto pm = partner_map(parse_wit(kTenNodes));
  ASSERT_TRUE(pm.is_permutation());
  ASSERT_EQ(pm.entries.size(), 11u);
  EXPECT_EQ(pm.entries[0].partner, 6);
  EXPECT_EQ(pm.entries[2].kind, PartnerMap::Case::non_youngest_leaf);
  EXPECT_EQ(pm.entries[4].kind, PartnerMap::Case::youngest_leaf);
  EXPECT_EQ(pm.entries[4].partner, 1);
  EXPECT_EQ(pm.entries[4].path_length, 2);
  EXPECT_EQ(pm.entries[10].partner, 0);
  EXPECT_EQ(pm.entries[10].path_length, 2);
  EXPECT_STREQ(case_name(PartnerMap::Case::youngest_leaf), "youngest-leaf");
}

TEST(ParityToggle, FlipsYleafParity) {
  for (const auto& t : enumerate_wit(parse_multiset("1^2,2^2,3^1"))) {
    const auto s = wit_stats(t);
    if (s.oleaf < 1 || s.oleaf > 2) continue;
    const auto u = parity_toggle(t);
    EXPECT_EQ(wit_stats(u).oleaf, s.oleaf);
    EXPECT_NE((wit_stats(u).yleaf - s.yleaf) % 2, 0);
    EXPECT_TRUE(parity_toggle(u) == t);
  }
  EXPECT_THROW(parity_toggle(parse_wit("0(1)")), DomainError);
}

TEST(Maps, RejectInvalidTrees) {
  EXPECT_THROW(Phi(parse_wit("0(1,2)")), DomainError);
  EXPECT_THROW(Theta(parse_wit("0(2)")), DomainError);
  EXPECT_THROW(psi(parse_binary("2(1;-)")), DomainError);
}
