#pragma once

#include <vector>

#include "treelab/multiset.hpp"
#include "treelab/trees.hpp"

namespace treelab {

// All binary shapes on `nodes` nodes (every label 1), i.e. B_{1^nodes}, in
// generation order: root left-subtree size ascending, then recursively.
std::vector<LabeledBinaryTree> binary_shapes(int nodes);

// Every monotone labeling of `shape` by M (child label >= parent label), each
// exactly once. `shape` must have |M| nodes.
std::vector<LabeledBinaryTree> monotone_labelings(const LabeledBinaryTree& shape, const Multiset& m);

// B_M sorted by canonical encoding (byte order).
std::vector<LabeledBinaryTree> enumerate_wibt(const Multiset& m);

// T_M = rho^{-1}(B_M), sorted by canonical encoding.
std::vector<WeaklyIncreasingTree> enumerate_wit(const Multiset& m);

// Plane trees with n edges, T_{1^n}.
inline std::vector<WeaklyIncreasingTree> enumerate_plane_trees(int n) { return enumerate_wit(Multiset::plane(n)); }

// Trees of T_M without young internal nodes.
std::vector<WeaklyIncreasingTree> enumerate_tip_augmented(const Multiset& m);

}  // namespace treelab
