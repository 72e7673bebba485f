#include "treelab/enumerate.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "treelab/bijections.hpp"
#include "treelab/encoding.hpp"
#include "treelab/errors.hpp"
#include "treelab/tree_stats.hpp"

namespace treelab {

namespace {

using BNode = LabeledBinaryTree::Node;

// Appends every shape on n nodes to `out` as node vectors in preorder.
void shapes_rec(int n, std::vector<std::vector<BNode>>& out) {
  if (n == 0) {
    out.emplace_back();
    return;
  }
  for (int left = 0; left < n; ++left) {
    std::vector<std::vector<BNode>> lefts, rights;
    shapes_rec(left, lefts);
    shapes_rec(n - 1 - left, rights);
    for (const auto& l : lefts) {
      for (const auto& r : rights) {
        std::vector<BNode> nodes;
        nodes.reserve(static_cast<std::size_t>(n));
        nodes.push_back(BNode{1, kNoNode, 0, kNoNode, kNoNode, kNoNode});
        const int loff = 1;
        const int roff = 1 + static_cast<int>(l.size());
        auto append = [&](const std::vector<BNode>& part, int off) {
          for (BNode b : part) {
            if (b.left != kNoNode) b.left += off;
            if (b.right != kNoNode) b.right += off;
            nodes.push_back(b);
          }
        };
        append(l, loff);
        append(r, roff);
        if (!l.empty()) nodes[0].left = loff;
        if (!r.empty()) nodes[0].right = roff;
        out.push_back(std::move(nodes));
      }
    }
  }
}

}  // namespace

std::vector<LabeledBinaryTree> binary_shapes(int nodes) {
  if (nodes < 1) throw DomainError("binary shapes need at least one node");
  std::vector<std::vector<BNode>> raw;
  shapes_rec(nodes, raw);
  std::vector<LabeledBinaryTree> out;
  out.reserve(raw.size());
  for (auto& r : raw) {
    for (std::size_t i = 0; i < r.size(); ++i) r[i].tag = static_cast<int>(i) + 1;
    out.push_back(LabeledBinaryTree::from_nodes(r, 0));
  }
  return out;
}

std::vector<LabeledBinaryTree> monotone_labelings(const LabeledBinaryTree& shape, const Multiset& m) {
  if (static_cast<int>(shape.size()) != m.cardinality()) throw DomainError("shape size differs from |M|");
  std::vector<BNode> nodes(shape.nodes().begin(), shape.nodes().end());
  std::vector<int> remaining(m.multiplicities().begin(), m.multiplicities().end());
  std::vector<LabeledBinaryTree> out;

  // Preorder places every parent before its children.
  auto assign = [&](auto&& self, std::size_t i) -> void {
    if (i == nodes.size()) {
      out.push_back(LabeledBinaryTree::from_nodes(nodes, 0));
      return;
    }
    const int floor = nodes[i].parent == kNoNode ? 1 : nodes[static_cast<std::size_t>(nodes[i].parent)].label;
    for (int v = floor; v <= m.distinct_values(); ++v) {
      auto& left = remaining[static_cast<std::size_t>(v - 1)];
      if (left == 0) continue;
      --left;
      nodes[i].label = v;
      self(self, i + 1);
      ++left;
    }
  };
  assign(assign, 0);
  return out;
}

namespace {

template <class Tree>
std::vector<Tree> sorted_by_encoding(std::vector<Tree> trees) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) keys.emplace_back(render(trees[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<Tree> out;
  out.reserve(trees.size());
  for (const auto& k : keys) out.push_back(std::move(trees[k.second]));
  return out;
}

}  // namespace

std::vector<LabeledBinaryTree> enumerate_wibt(const Multiset& m) {
  std::vector<LabeledBinaryTree> all;
  for (const auto& shape : binary_shapes(m.cardinality())) {
    auto labeled = monotone_labelings(shape, m);
    std::move(labeled.begin(), labeled.end(), std::back_inserter(all));
  }
  return sorted_by_encoding(std::move(all));
}

std::vector<WeaklyIncreasingTree> enumerate_wit(const Multiset& m) {
  std::vector<WeaklyIncreasingTree> all;
  const auto binaries = enumerate_wibt(m);
  all.reserve(binaries.size());
  for (const auto& b : binaries) all.push_back(rho_inv(b));
  return sorted_by_encoding(std::move(all));
}

std::vector<WeaklyIncreasingTree> enumerate_tip_augmented(const Multiset& m) {
  std::vector<WeaklyIncreasingTree> out;
  for (auto& t : enumerate_wit(m)) {
    if (wit_stats(t).yint == 0) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace treelab
