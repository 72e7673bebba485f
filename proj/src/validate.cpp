#include "treelab/validate.hpp"

#include <map>

#include "treelab/encoding.hpp"
#include "treelab/errors.hpp"

namespace treelab {

namespace {

std::optional<Multiset> multiset_from_counts(const std::map<int, int>& counts) {
  if (counts.empty() || counts.begin()->first != 1 || counts.rbegin()->first != static_cast<int>(counts.size()))
    return std::nullopt;
  std::vector<int> mult;
  for (const auto& [value, count] : counts) mult.push_back(count);
  return Multiset(std::move(mult));
}

// Labels must be exactly {1^p1..n^pn}; reports the node carrying the first
// label that breaks contiguity or does not match `expected`.
template <class Tree>
std::optional<Violation> check_label_multiset(const Tree& tree, int first, const std::optional<Multiset>& expected) {
  std::map<int, int> counts;
  for (std::size_t i = static_cast<std::size_t>(first); i < tree.size(); ++i) ++counts[tree.node(static_cast<int>(i)).label];
  auto implied = multiset_from_counts(counts);
  if (!implied) {
    int expect = 1;
    int missing = 0;
    for (const auto& [value, count] : counts) {
      if (value != expect) { missing = expect; break; }
      ++expect;
    }
    for (std::size_t i = static_cast<std::size_t>(first); i < tree.size(); ++i) {
      if (tree.node(static_cast<int>(i)).label > missing)
        return Violation{static_cast<int>(i), "labels skip value " + std::to_string(missing)};
    }
    return Violation{first, "labels do not form a multiset {1^p1,...,n^pn}"};
  }
  if (expected && *implied != *expected)
    return Violation{first, "label multiset is " + implied->to_string() + ", expected " + expected->to_string()};
  return std::nullopt;
}

}  // namespace

std::string describe(const Violation& v) { return "node " + std::to_string(v.node) + ": " + v.rule; }

std::optional<Violation> validate_wit(const WeaklyIncreasingTree& tree, const std::optional<Multiset>& expected) {
  if (tree.root().label != 0) return Violation{0, "root label must be 0"};
  if (tree.size() < 2) return Violation{0, "tree must have at least one non-root node"};
  for (std::size_t idx = 1; idx < tree.size(); ++idx) {
    const int i = static_cast<int>(idx);
    const auto& n = tree.node(i);
    if (n.label <= 0) return Violation{i, "label 0 below the root"};
    if (n.label < tree.node(n.parent).label) return Violation{i, "label smaller than its parent's (path must weakly increase)"};
    const int s = tree.sibling_index(i);
    if (s > 0) {
      const int elder = tree.node(n.parent).children[static_cast<std::size_t>(s - 1)];
      if (tree.node(elder).label < n.label)
        return Violation{i, "label larger than its elder sibling's (children must weakly decrease left to right)"};
    }
  }
  return check_label_multiset(tree, 1, expected);
}

std::optional<Violation> validate_wibt(const LabeledBinaryTree& tree, const std::optional<Multiset>& expected) {
  for (std::size_t idx = 0; idx < tree.size(); ++idx) {
    const int i = static_cast<int>(idx);
    const auto& n = tree.node(i);
    if (n.label <= 0) return Violation{i, "labels must be positive"};
    if (n.parent != kNoNode && n.label < tree.node(n.parent).label)
      return Violation{i, "label smaller than its parent's (labels must weakly increase downward)"};
  }
  return check_label_multiset(tree, 0, expected);
}

std::optional<Multiset> label_multiset(const WeaklyIncreasingTree& tree) {
  std::map<int, int> counts;
  for (std::size_t i = 1; i < tree.size(); ++i) ++counts[tree.node(static_cast<int>(i)).label];
  return multiset_from_counts(counts);
}

std::optional<Multiset> label_multiset(const LabeledBinaryTree& tree) {
  std::map<int, int> counts;
  for (const auto& n : tree.nodes()) ++counts[n.label];
  return multiset_from_counts(counts);
}

void require_valid(const WeaklyIncreasingTree& tree) {
  if (auto v = validate_wit(tree)) throw DomainError("invalid weakly increasing tree " + render(tree) + ": " + describe(*v));
}

void require_valid(const LabeledBinaryTree& tree) {
  if (auto v = validate_wibt(tree)) throw DomainError("invalid weakly increasing binary tree " + render(tree) + ": " + describe(*v));
}

}  // namespace treelab
