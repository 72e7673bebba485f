#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treelab/integer.hpp"

namespace treelab {

// The label multiset {1^p1, 2^p2, ..., n^pn}. Every value 1..n occurs at
// least once; zero multiplicities are not representable.
class Multiset {
 public:
  // Throws std::invalid_argument on an empty sequence or a non-positive entry.
  explicit Multiset(std::vector<int> multiplicities);

  // {1^m}: plane trees with m edges.
  static Multiset plane(int m) { return Multiset({m}); }
  // {1, 2, ..., n}: increasing trees.
  static Multiset distinct(int n);

  int distinct_values() const noexcept { return static_cast<int>(mult_.size()); }
  int cardinality() const noexcept { return cardinality_; }
  // Multiplicity of value v, 1 <= v <= distinct_values().
  int multiplicity(int v) const { return mult_.at(static_cast<std::size_t>(v - 1)); }
  // N_i = p_1 + ... + p_i
  int partial_sum(int i) const;
  std::span<const int> multiplicities() const noexcept { return mult_; }

  // Canonical "1^p1,2^p2,..." text.
  std::string to_string() const;

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset&, const Multiset&) = default;

 private:
  std::vector<int> mult_;
  int cardinality_ = 0;
};

// Parses "v^p,..." with values 1..n listed contiguously in ascending order.
// Throws ParseError naming the offending token.
Multiset parse_multiset(std::string_view text);

// All multisets of cardinality m, i.e. all compositions of m, in
// lexicographic order of their multiplicity sequences.
std::vector<Multiset> compositions(int m);

// Number of weakly increasing trees on M:
//   (1 / (1 + N_n)) * prod_i binom(N_i + p_i, p_i).
Integer count_wit(const Multiset& m);

}  // namespace treelab
