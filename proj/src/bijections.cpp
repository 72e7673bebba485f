#include "treelab/bijections.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "treelab/errors.hpp"
#include "treelab/validate.hpp"

namespace treelab {

namespace {

using BNode = LabeledBinaryTree::Node;
using WNode = WeaklyIncreasingTree::Node;

std::vector<BNode> copy_nodes(const LabeledBinaryTree& t) { return {t.nodes().begin(), t.nodes().end()}; }

LabeledBinaryTree rebuild(const std::vector<BNode>& nodes) { return LabeledBinaryTree::from_nodes(nodes, 0); }

void check_ref(const LabeledBinaryTree& t, NodeRef x) {
  if (x.index < 0 || x.index >= static_cast<int>(t.size()))
    throw DomainError("node index " + std::to_string(x.index) + " out of range for a tree with " +
                      std::to_string(t.size()) + " nodes");
}

// Number of right edges on the root path of every node.
std::vector<int> right_edges(const LabeledBinaryTree& t) {
  std::vector<int> out(t.size(), 0);
  for (std::size_t i = 1; i < t.size(); ++i) {
    const int p = t.node(static_cast<int>(i)).parent;
    out[i] = out[static_cast<std::size_t>(p)] + (t.is_right_child(static_cast<int>(i)) ? 1 : 0);
  }
  return out;
}

}  // namespace

LabeledBinaryTree rho(const WeaklyIncreasingTree& tree) {
  require_valid(tree);
  // WIT node i (i >= 1) becomes binary node i - 1.
  const int m = static_cast<int>(tree.size()) - 1;
  std::vector<BNode> out(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const auto& n = tree.node(i);
    auto& b = out[static_cast<std::size_t>(i - 1)];
    b.label = n.label;
    b.tag = n.tag;
    if (!n.children.empty()) b.right = n.children.back() - 1;
    const int s = tree.sibling_index(i);
    if (s > 0) b.left = tree.node(n.parent).children[static_cast<std::size_t>(s - 1)] - 1;
  }
  return LabeledBinaryTree::from_nodes(out, tree.root().children.back() - 1);
}

WeaklyIncreasingTree rho_inv(const LabeledBinaryTree& tree) {
  require_valid(tree);
  const int m = static_cast<int>(tree.size());
  std::vector<WNode> out(static_cast<std::size_t>(m) + 1);
  auto children_from = [&](int start) {
    std::vector<int> chain;
    for (int c = start; c != kNoNode; c = tree.node(c).left) chain.push_back(c + 1);
    std::reverse(chain.begin(), chain.end());
    return chain;
  };
  out[0].label = 0;
  out[0].tag = 0;
  out[0].children = children_from(0);
  for (int i = 0; i < m; ++i) {
    const auto& b = tree.node(i);
    auto& w = out[static_cast<std::size_t>(i) + 1];
    w.label = b.label;
    w.tag = b.tag;
    if (b.right != kNoNode) w.children = children_from(b.right);
  }
  return WeaklyIncreasingTree::from_nodes(out, 0);
}

LabeledBinaryTree switch_at(const LabeledBinaryTree& tree, NodeRef x) { return switch_set(tree, {x}); }

LabeledBinaryTree switch_set(const LabeledBinaryTree& tree, const std::vector<NodeRef>& xs) {
  require_valid(tree);
  auto nodes = copy_nodes(tree);
  for (NodeRef x : xs) {
    check_ref(tree, x);
    auto& n = nodes[static_cast<std::size_t>(x.index)];
    std::swap(n.left, n.right);
  }
  return rebuild(nodes);
}

LabeledBinaryTree mirror(const LabeledBinaryTree& tree) {
  std::vector<NodeRef> all;
  for (int i = 0; i < static_cast<int>(tree.size()); ++i) all.push_back({i});
  return switch_set(tree, all);
}

WeaklyIncreasingTree Phi(const WeaklyIncreasingTree& tree) { return rho_inv(mirror(rho(tree))); }

std::vector<NodeRef> unbalanced_set(const LabeledBinaryTree& tree) {
  std::vector<NodeRef> out;
  for (int i = 0; i < static_cast<int>(tree.size()); ++i) {
    const auto& n = tree.node(i);
    if (n.left == kNoNode || n.right == kNoNode) continue;
    if (tree.is_leaf(n.left) != tree.is_leaf(n.right)) out.push_back({i});
  }
  return out;
}

LabeledBinaryTree psi(const LabeledBinaryTree& tree) { return switch_set(tree, unbalanced_set(tree)); }

WeaklyIncreasingTree Psi(const WeaklyIncreasingTree& tree) { return rho_inv(psi(rho(tree))); }

LabeledBinaryTree varphi(const LabeledBinaryTree& tree, int i) {
  check_ref(tree, {i - 1});
  if (tree.child_count(i - 1) != 1) {
    require_valid(tree);
    return tree;
  }
  return switch_at(tree, {i - 1});
}

LabeledBinaryTree orbit_canonical(const LabeledBinaryTree& tree) {
  // Switching a single-child node leaves the preorder sequence alone, so one
  // sweep reaches the fixpoint.
  std::vector<NodeRef> only_right;
  for (int i = 0; i < static_cast<int>(tree.size()); ++i) {
    const auto& n = tree.node(i);
    if (n.left == kNoNode && n.right != kNoNode) only_right.push_back({i});
  }
  return switch_set(tree, only_right);
}

std::vector<NodeRef> heads(const LabeledBinaryTree& tree) {
  std::vector<NodeRef> out{{0}};
  for (int i = 1; i < static_cast<int>(tree.size()); ++i)
    if (tree.is_right_child(i)) out.push_back({i});
  return out;
}

LabeledBinaryTree theta(const LabeledBinaryTree& tree) { return switch_set(tree, heads(tree)); }

std::vector<NodeRef> odd_right_level_set(const LabeledBinaryTree& tree) {
  // right-level = right edges + 1
  const auto r = right_edges(tree);
  std::vector<NodeRef> out;
  for (int i = 0; i < static_cast<int>(tree.size()); ++i)
    if (r[static_cast<std::size_t>(i)] % 2 == 0) out.push_back({i});
  return out;
}

LabeledBinaryTree theta_inv(const LabeledBinaryTree& tree) { return switch_set(tree, odd_right_level_set(tree)); }

WeaklyIncreasingTree Theta(const WeaklyIncreasingTree& tree) { return rho_inv(theta(rho(tree))); }

WeaklyIncreasingTree Theta_inv(const WeaklyIncreasingTree& tree) { return rho_inv(theta_inv(rho(tree))); }

namespace {

// Appends the hat of the subtree at `v` to `out`, returns its new index.
int hat_into(const WeaklyIncreasingTree& t, int v, std::vector<WNode>& out) {
  const auto& n = t.node(v);
  if (n.children.empty()) {
    out.push_back(WNode{n.label, kNoNode, 0, {}, n.tag});
    return static_cast<int>(out.size()) - 1;
  }
  const int youngest = n.children.back();
  const int top = hat_into(t, youngest, out);
  const int fresh = static_cast<int>(out.size());
  out.push_back(WNode{t.node(youngest).label, kNoNode, 0, {}, t.node(youngest).tag});
  // The hat root takes over this node's label and identity.
  out[static_cast<std::size_t>(top)].label = n.label;
  out[static_cast<std::size_t>(top)].tag = n.tag;
  for (std::size_t c = 0; c + 1 < n.children.size(); ++c) {
    const int sub = hat_into(t, n.children[c], out);
    out[static_cast<std::size_t>(fresh)].children.push_back(sub);
  }
  out[static_cast<std::size_t>(top)].children.push_back(fresh);
  return top;
}

}  // namespace

WeaklyIncreasingTree hat_recursive(const WeaklyIncreasingTree& tree) {
  require_valid(tree);
  std::vector<WNode> out;
  out.reserve(tree.size());
  const int root = hat_into(tree, 0, out);
  return WeaklyIncreasingTree::from_nodes(out, root);
}

bool PartnerMap::is_permutation() const {
  std::vector<char> hit(entries.size(), 0);
  for (const auto& e : entries) {
    if (e.partner < 0 || e.partner >= static_cast<int>(entries.size()) || hit[static_cast<std::size_t>(e.partner)])
      return false;
    hit[static_cast<std::size_t>(e.partner)] = 1;
  }
  return true;
}

const char* case_name(PartnerMap::Case c) {
  switch (c) {
    case PartnerMap::Case::internal: return "internal";
    case PartnerMap::Case::non_youngest_leaf: return "non-youngest-leaf";
    case PartnerMap::Case::youngest_leaf: return "youngest-leaf";
  }
  return "?";
}

PartnerMap partner_map(const WeaklyIncreasingTree& tree) {
  require_valid(tree);
  PartnerMap pm;
  pm.entries.resize(tree.size());
  for (int v = 0; v < static_cast<int>(tree.size()); ++v) {
    auto& e = pm.entries[static_cast<std::size_t>(v)];
    const auto& n = tree.node(v);
    if (!n.children.empty()) {
      e = {n.children.back(), PartnerMap::Case::internal, 0};
    } else if (!tree.is_rightmost_child(v)) {
      e = {v, PartnerMap::Case::non_youngest_leaf, 0};
    } else {
      int u = n.parent;
      int k = 1;
      while (tree.is_rightmost_child(u)) {
        u = tree.node(u).parent;
        ++k;
      }
      e = {u, PartnerMap::Case::youngest_leaf, k};
    }
  }
  return pm;
}

WeaklyIncreasingTree parity_toggle(const WeaklyIncreasingTree& tree) {
  const auto b = rho(tree);
  for (int i = 0; i < static_cast<int>(b.size()); ++i)
    if (b.child_count(i) == 1) return rho_inv(switch_at(b, {i}));
  throw DomainError("no single-child node");
}

}  // namespace treelab
