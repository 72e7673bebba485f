#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "treelab/trees.hpp"

namespace treelab {

// Word of distinct positive letters; for S_n it holds exactly 1..n.
class Permutation {
 public:
  Permutation() = default;
  // Throws DomainError on repeated or non-positive letters.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  std::size_t size() const noexcept { return word_.size(); }
  const std::vector<int>& word() const noexcept { return word_; }
  int operator[](std::size_t i) const { return word_[i]; }  // 0-based
  bool is_sn() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

// "3 2 1 5 4 6", "3,2,1,5,4,6", or a compact digit string "321546" when no
// separator is present (single-digit letters only). Throws ParseError.
Permutation parse_permutation(std::string_view text);
std::string render(const Permutation& p);  // space-separated

// Sets hold 1-based indices.
struct PermStatVector {
  std::set<int> DES, ASC, tildeASC;
  int des = 0, asc = 0, pk = 0, pk1 = 0, pk2 = 0, dd = 0, da = 0;
  int lmin = 0, rmin = 0, ldr = 0, rar = 0, mna = 0, mnd = 0, st1 = 0, st2 = 0;
};

// pi must be in S_n, n >= 1; otherwise DomainError.
PermStatVector perm_stats(const Permutation& pi);

// Statistic names: des, asc, pk, pk1, pk2, dd, da, lmin, rmin, ldr, rar, mna,
// mnd, st1, st2. Throws std::invalid_argument for others.
int perm_statistic(const PermStatVector& s, std::string_view name);
const std::vector<std::string>& perm_statistic_names();

// Windows of length |pattern| order-isomorphic to pattern. Letters of `word`
// must be distinct (0 allowed); pattern must be in S_k.
int consecutive_pattern_count(const std::vector<int>& word, const std::vector<int>& pattern);
int st1(const Permutation& pi);  // 1324 in 0 pi
int st2(const Permutation& pi);  // 3241 in pi 0

// Min-split: the least letter is the root, the letters before / after it
// form the left / right subtree.
LabeledBinaryTree lambda_map(const std::vector<int>& word);
std::vector<int> lambda_inv(const LabeledBinaryTree& tree);

// Empty string when the peak / leaf correspondences hold, otherwise a
// description of the first failing letter.
std::string peak_leaf_check(const Permutation& pi);

std::vector<Permutation> enumerate_permutations(int n);  // lexicographic
std::vector<Permutation> enumerate_avoiding_312(int n);  // lexicographic
bool is_312_avoiding(const Permutation& pi);

// Unlabeled shape (all labels 1) of lambda(pi); DomainError unless pi avoids 312.
LabeledBinaryTree shape_of(const Permutation& pi);
// Preorder relabeling 1..n, then in-order reading.
Permutation from_shape(const LabeledBinaryTree& shape);

Permutation Lambda(const Permutation& pi);
Permutation Upsilon(const Permutation& pi);

}  // namespace treelab
