#pragma once

#include <vector>

#include "treelab/trees.hpp"

namespace treelab {

// Preorder index into a specific tree.
struct NodeRef {
  int index = 0;
  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

// Every map below validates its input and throws DomainError for invalid
// trees. Node tags are carried through unchanged; rho_inv gives the new root
// tag 0.

// Binary root = rightmost child of the root; right child of x = rightmost
// child of x; left child of x = closest elder sibling of x.
LabeledBinaryTree rho(const WeaklyIncreasingTree& tree);
WeaklyIncreasingTree rho_inv(const LabeledBinaryTree& tree);

// Exchanges the two branches at x. Throws DomainError when x is out of range.
LabeledBinaryTree switch_at(const LabeledBinaryTree& tree, NodeRef x);
LabeledBinaryTree switch_set(const LabeledBinaryTree& tree, const std::vector<NodeRef>& xs);

LabeledBinaryTree mirror(const LabeledBinaryTree& tree);
WeaklyIncreasingTree Phi(const WeaklyIncreasingTree& tree);

// Nodes with two children exactly one of which is a leaf.
std::vector<NodeRef> unbalanced_set(const LabeledBinaryTree& tree);
LabeledBinaryTree psi(const LabeledBinaryTree& tree);
WeaklyIncreasingTree Psi(const WeaklyIncreasingTree& tree);

// Switch at the i-th preorder node (1-based) when it has exactly one child.
LabeledBinaryTree varphi(const LabeledBinaryTree& tree, int i);
// Orbit member without only-right nodes.
LabeledBinaryTree orbit_canonical(const LabeledBinaryTree& tree);

// Root plus all right children.
std::vector<NodeRef> heads(const LabeledBinaryTree& tree);
LabeledBinaryTree theta(const LabeledBinaryTree& tree);
// Nodes with an even number of right edges on their root path.
std::vector<NodeRef> odd_right_level_set(const LabeledBinaryTree& tree);
LabeledBinaryTree theta_inv(const LabeledBinaryTree& tree);

WeaklyIncreasingTree Theta(const WeaklyIncreasingTree& tree);
WeaklyIncreasingTree Theta_inv(const WeaklyIncreasingTree& tree);
WeaklyIncreasingTree hat_recursive(const WeaklyIncreasingTree& tree);

struct PartnerMap {
  enum class Case { internal, non_youngest_leaf, youngest_leaf };
  struct Entry {
    int partner = 0;
    Case kind = Case::internal;
    int path_length = 0;  // youngest leaves only
  };
  std::vector<Entry> entries;  // indexed by preorder index

  bool is_permutation() const;
};

PartnerMap partner_map(const WeaklyIncreasingTree& tree);
const char* case_name(PartnerMap::Case c);

// Switch at the first preorder single-child node of rho(T). Throws
// DomainError("no single-child node") when there is none.
WeaklyIncreasingTree parity_toggle(const WeaklyIncreasingTree& tree);

}  // namespace treelab
