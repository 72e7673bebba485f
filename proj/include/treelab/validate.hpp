#pragma once

#include <optional>
#include <string>

#include "treelab/multiset.hpp"
#include "treelab/trees.hpp"

namespace treelab {

struct Violation {
  int node = 0;  // preorder index of the first offending node
  std::string rule;
};

std::string describe(const Violation& v);

// Checks root label 0, positive labels below the root, weak increase along
// root-to-leaf paths and weak decrease of child labels left to right, and
// that the non-root labels form a multiset {1^p1, ..., n^pn}. With `expected`
// the label multiset must equal it.
std::optional<Violation> validate_wit(const WeaklyIncreasingTree& tree,
                                      const std::optional<Multiset>& expected = std::nullopt);

// Positive labels, child label >= parent label, contiguous label multiset.
std::optional<Violation> validate_wibt(const LabeledBinaryTree& tree,
                                       const std::optional<Multiset>& expected = std::nullopt);

// The multiset formed by the (non-root) labels; nullopt when values are not
// contiguous from 1 or a label is not positive.
std::optional<Multiset> label_multiset(const WeaklyIncreasingTree& tree);
std::optional<Multiset> label_multiset(const LabeledBinaryTree& tree);

// Throw DomainError with the violation text when the tree is invalid.
void require_valid(const WeaklyIncreasingTree& tree);
void require_valid(const LabeledBinaryTree& tree);

}  // namespace treelab
