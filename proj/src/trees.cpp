#include "treelab/trees.hpp"

#include <algorithm>

#include "treelab/errors.hpp"

namespace treelab {

WeaklyIncreasingTree WeaklyIncreasingTree::from_nodes(const std::vector<Node>& nodes, int root) {
  if (nodes.empty()) throw DomainError("empty tree");
  WeaklyIncreasingTree out;
  out.nodes_.reserve(nodes.size());
  std::vector<char> seen(nodes.size(), 0);

  // Iterative preorder so that deep chains do not exhaust the stack.
  struct Frame { int old_index; int parent; int depth; };
  std::vector<Frame> stack{{root, kNoNode, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.old_index < 0 || f.old_index >= static_cast<int>(nodes.size()) || seen[static_cast<std::size_t>(f.old_index)])
      throw DomainError("malformed tree structure");
    seen[static_cast<std::size_t>(f.old_index)] = 1;
    const Node& src = nodes[static_cast<std::size_t>(f.old_index)];
    const int self = static_cast<int>(out.nodes_.size());
    out.nodes_.push_back(Node{src.label, f.parent, f.depth, {}, src.tag});
    if (f.parent != kNoNode) out.nodes_[static_cast<std::size_t>(f.parent)].children.push_back(self);
    for (auto it = src.children.rbegin(); it != src.children.rend(); ++it) stack.push_back({*it, self, f.depth + 1});
  }
  if (out.nodes_.size() != nodes.size()) throw DomainError("tree has unreachable nodes");
  return out;
}

int WeaklyIncreasingTree::sibling_index(int i) const {
  const int p = node(i).parent;
  if (p == kNoNode) return 0;
  const auto& siblings = node(p).children;
  return static_cast<int>(std::find(siblings.begin(), siblings.end(), i) - siblings.begin());
}

bool WeaklyIncreasingTree::is_rightmost_child(int i) const {
  const int p = node(i).parent;
  return p != kNoNode && node(p).children.back() == i;
}

int WeaklyIncreasingTree::find_tag(int tag) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].tag == tag) return static_cast<int>(i);
  return kNoNode;
}

bool operator==(const WeaklyIncreasingTree& a, const WeaklyIncreasingTree& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.nodes_[i].label != b.nodes_[i].label || a.nodes_[i].children != b.nodes_[i].children) return false;
  }
  return true;
}

LabeledBinaryTree LabeledBinaryTree::from_nodes(const std::vector<Node>& nodes, int root) {
  if (nodes.empty()) throw DomainError("empty tree");
  LabeledBinaryTree out;
  out.nodes_.reserve(nodes.size());
  std::vector<char> seen(nodes.size(), 0);

  struct Frame { int old_index; int parent; int depth; bool is_left; };
  std::vector<Frame> stack{{root, kNoNode, 0, false}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.old_index < 0 || f.old_index >= static_cast<int>(nodes.size()) || seen[static_cast<std::size_t>(f.old_index)])
      throw DomainError("malformed tree structure");
    seen[static_cast<std::size_t>(f.old_index)] = 1;
    const Node& src = nodes[static_cast<std::size_t>(f.old_index)];
    const int self = static_cast<int>(out.nodes_.size());
    out.nodes_.push_back(Node{src.label, f.parent, f.depth, kNoNode, kNoNode, src.tag});
    if (f.parent != kNoNode) {
      auto& parent = out.nodes_[static_cast<std::size_t>(f.parent)];
      (f.is_left ? parent.left : parent.right) = self;
    }
    if (src.right != kNoNode) stack.push_back({src.right, self, f.depth + 1, false});
    if (src.left != kNoNode) stack.push_back({src.left, self, f.depth + 1, true});
  }
  if (out.nodes_.size() != nodes.size()) throw DomainError("tree has unreachable nodes");
  return out;
}

bool LabeledBinaryTree::is_left_child(int i) const {
  const int p = node(i).parent;
  return p != kNoNode && node(p).left == i;
}

bool LabeledBinaryTree::is_right_child(int i) const {
  const int p = node(i).parent;
  return p != kNoNode && node(p).right == i;
}

int LabeledBinaryTree::find_tag(int tag) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].tag == tag) return static_cast<int>(i);
  return kNoNode;
}

bool operator==(const LabeledBinaryTree& a, const LabeledBinaryTree& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a.nodes_[i];
    const auto& y = b.nodes_[i];
    if (x.label != y.label || x.left != y.left || x.right != y.right) return false;
  }
  return true;
}

}  // namespace treelab
