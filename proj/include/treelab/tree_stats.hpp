#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treelab/trees.hpp"

namespace treelab {

// Node classification counts on a weakly increasing tree.
//
// old leaf: leftmost child that is a leaf; young leaf: any other leaf.
// singleton leaf: old leaf without siblings; elder leaf: old leaf with siblings.
// singleton / elder internal: parent of a singleton / elder leaf; young
// internal: every other internal node (its leftmost child is internal).
struct WitStatVector {
  int sleaf = 0, eleaf = 0, yleaf = 0;
  int sint = 0, eint = 0, yint = 0;
  int oleaf = 0, oint = 0, leaf = 0;
  int suleaf = 0, snuleaf = 0;   // singleton leaf whose parent has / has no elder sibling
  int etleaf = 0, entleaf = 0;   // elder leaf whose parent's second child is / is not a leaf
  int syleaf = 0, yerleaf = 0;   // young leaf that is / is not the second child
  int ystleaf = 0;               // leaves that are the rightmost child
  int el = 0, elint = 0, elleaf = 0;  // nodes / internal nodes / leaves on even levels (root: level 0)
  std::map<int, int> deg;        // degree q -> number of nodes; absent key means 0
  std::map<int, int> od;         // degree q -> number of odd-level nodes

  int deg_at(int q) const;
  int od_at(int q) const;
};

WitStatVector wit_stats(const WeaklyIncreasingTree& tree);

// Structural counts on a binary tree; labels are ignored.
struct BinaryStatVector {
  int right_leaf = 0, left_leaf = 0;
  int only_left = 0, only_right = 0;
  int leaf_count = 0;
  int rl_parent_has_left = 0, rl_parent_no_left = 0;
  int ll_parent_no_right = 0, ll_parent_has_right = 0;
  int ol_left_has_left = 0, ol_left_no_left = 0;  // only-left nodes whose left child has / lacks a left child
  int twin = 0;                                   // nodes whose two children are both leaves
};

BinaryStatVector binary_stats(const LabeledBinaryTree& tree);

// Names accepted by parse_statistic: sleaf, eleaf, yleaf, sint, eint, yint,
// oleaf, oint, leaf, suleaf, snuleaf, etleaf, entleaf, syleaf, yerleaf,
// ystleaf, el, elint, elleaf, deg:<q>, od:<q>.
struct StatisticId {
  enum class Kind {
    sleaf, eleaf, yleaf, sint, eint, yint, oleaf, oint, leaf, suleaf, snuleaf,
    etleaf, entleaf, syleaf, yerleaf, ystleaf, el, elint, elleaf, deg, od
  };
  Kind kind = Kind::sleaf;
  int q = 0;  // only for deg / od

  friend bool operator==(const StatisticId&, const StatisticId&) = default;
};

// Throws std::invalid_argument listing the valid names.
StatisticId parse_statistic(std::string_view name);
std::string statistic_name(StatisticId id);
const std::vector<std::string>& statistic_names();
int statistic_value(const WitStatVector& stats, StatisticId id);

// Default variable used for a statistic when a caller gives none.
std::string default_variable(StatisticId id);

struct TransportMismatch {
  std::string statistic;
  int plane_value = 0;
  int binary_value = 0;
};

std::string describe(const TransportMismatch& m);

// Leaf-kind transport (sleaf, eleaf, yleaf, yint, oleaf) to rho(T) and the
// refined transport (suleaf, snuleaf, etleaf, entleaf, yerleaf, syleaf).
// Both need at least two edges; callers skip single-edge trees.
std::optional<TransportMismatch> transport_check_leaf_kinds(const WeaklyIncreasingTree& tree);
std::optional<TransportMismatch> transport_check_refined(const WeaklyIncreasingTree& tree);
std::optional<TransportMismatch> transport_check(const WeaklyIncreasingTree& tree);

}  // namespace treelab
