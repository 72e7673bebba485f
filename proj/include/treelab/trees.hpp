#pragma once

#include <span>
#include <vector>

namespace treelab {

inline constexpr int kNoNode = -1;

// Ordered rooted tree whose root carries label 0. Nodes are stored in preorder
// (parent, then children left to right), so a node's identity in the public
// API is its preorder index. `tag` is an opaque identifier that survives the
// tree-to-tree maps; it is not compared by operator==.
class WeaklyIncreasingTree {
 public:
  struct Node {
    int label = 0;
    int parent = kNoNode;
    int depth = 0;
    std::vector<int> children;  // left to right
    int tag = kNoNode;
  };

  // Builds a tree from nodes in arbitrary order rooted at `root`; only label,
  // children and tag are read. The result is re-indexed into preorder.
  // Throws DomainError for an empty node list or a malformed child structure.
  static WeaklyIncreasingTree from_nodes(const std::vector<Node>& nodes, int root);

  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const Node> nodes() const noexcept { return nodes_; }
  const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  const Node& root() const { return nodes_.front(); }

  bool is_leaf(int i) const { return node(i).children.empty(); }
  int degree(int i) const { return static_cast<int>(node(i).children.size()); }
  // Position among siblings, 0 = leftmost. The root reports 0.
  int sibling_index(int i) const;
  bool is_leftmost_child(int i) const { return node(i).parent != kNoNode && sibling_index(i) == 0; }
  bool is_rightmost_child(int i) const;

  // Preorder index of the node with `tag`, or kNoNode.
  int find_tag(int tag) const;

  friend bool operator==(const WeaklyIncreasingTree& a, const WeaklyIncreasingTree& b);

 private:
  std::vector<Node> nodes_;
};

// Binary tree with weakly increasing labels from root to leaves. Nodes are
// stored in preorder (parent, left subtree, right subtree).
class LabeledBinaryTree {
 public:
  struct Node {
    int label = 0;
    int parent = kNoNode;
    int depth = 0;
    int left = kNoNode;
    int right = kNoNode;
    int tag = kNoNode;
  };

  static LabeledBinaryTree from_nodes(const std::vector<Node>& nodes, int root);

  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const Node> nodes() const noexcept { return nodes_; }
  const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

  int child_count(int i) const { return (node(i).left != kNoNode) + (node(i).right != kNoNode); }
  bool is_leaf(int i) const { return child_count(i) == 0; }
  bool is_left_child(int i) const;
  bool is_right_child(int i) const;

  int find_tag(int tag) const;

  friend bool operator==(const LabeledBinaryTree& a, const LabeledBinaryTree& b);

 private:
  std::vector<Node> nodes_;
};

}  // namespace treelab
