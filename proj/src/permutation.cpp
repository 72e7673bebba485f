#include "treelab/permutation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "treelab/bijections.hpp"
#include "treelab/enumerate.hpp"
#include "treelab/errors.hpp"

namespace treelab {

namespace {

void require_distinct(const std::vector<int>& word) {
  std::unordered_set<int> seen;
  for (int v : word)
    if (!seen.insert(v).second) throw DomainError("repeated letter " + std::to_string(v));
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  for (int v : word_)
    if (v <= 0) throw DomainError("letters must be positive, got " + std::to_string(v));
  require_distinct(word_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

bool Permutation::is_sn() const {
  const int n = static_cast<int>(word_.size());
  return std::all_of(word_.begin(), word_.end(), [n](int v) { return v >= 1 && v <= n; });
}

Permutation parse_permutation(std::string_view text) {
  const bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  std::vector<int> word;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError(std::string("unexpected character '") + text[i] + "' in permutation", i);
    if (!separated) {
      word.push_back(text[i] - '0');
      ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc()) throw ParseError("letter out of range", i);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && text[i] != ' ' && text[i] != ',' && text[i] != '\t')
      throw ParseError(std::string("unexpected character '") + text[i] + "' in permutation", i);
    word.push_back(v);
    skip();
  }
  if (word.empty()) throw ParseError("empty permutation", 0);
  for (std::size_t k = 0; k < word.size(); ++k)
    if (word[k] <= 0) throw ParseError("letters must be positive", k);
  try {
    return Permutation(std::move(word));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string render(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

namespace {

// Largest set of pairwise non-adjacent indices from a sorted set.
int max_non_adjacent(const std::set<int>& s) {
  int count = 0;
  int last = -2;
  for (int i : s) {
    if (i > last + 1) {
      ++count;
      last = i;
    }
  }
  return count;
}

}  // namespace

PermStatVector perm_stats(const Permutation& pi) {
  const int n = static_cast<int>(pi.size());
  if (n < 1 || !pi.is_sn()) throw DomainError("not a permutation of [n]: " + render(pi));
  PermStatVector s;
  auto at = [&](int i) { return (i < 1 || i > n) ? 0 : pi[static_cast<std::size_t>(i - 1)]; };
  for (int i = 1; i < n; ++i) {
    if (at(i) < at(i + 1)) {
      s.ASC.insert(i);
      s.tildeASC.insert(n - i);
    } else {
      s.DES.insert(i);
    }
  }
  s.des = static_cast<int>(s.DES.size());
  s.asc = static_cast<int>(s.ASC.size());
  for (int i = 1; i <= n; ++i) {
    const int a = at(i - 1), b = at(i), c = at(i + 1);
    if (a < b && b > c) {
      ++s.pk;
      if (a <= c) ++s.pk1; else ++s.pk2;
    } else if (a > b && b > c) {
      ++s.dd;
    } else if (a < b && b < c) {
      ++s.da;
    }
  }
  int low = n + 1;
  for (int i = 1; i <= n; ++i)
    if (at(i) < low) { low = at(i); ++s.lmin; }
  low = n + 1;
  for (int i = n; i >= 1; --i)
    if (at(i) < low) { low = at(i); ++s.rmin; }
  s.ldr = 1;
  while (s.ldr < n && at(s.ldr) > at(s.ldr + 1)) ++s.ldr;
  s.rar = 1;
  while (s.rar < n && at(n - s.rar) < at(n - s.rar + 1)) ++s.rar;
  s.mna = max_non_adjacent(s.ASC);
  s.mnd = max_non_adjacent(s.DES);
  s.st1 = st1(pi);
  s.st2 = st2(pi);
  return s;
}

const std::vector<std::string>& perm_statistic_names() {
  static const std::vector<std::string> names{"des", "asc", "pk", "pk1", "pk2", "dd", "da", "lmin",
                                              "rmin", "ldr", "rar", "mna", "mnd", "st1", "st2"};
  return names;
}

int perm_statistic(const PermStatVector& s, std::string_view name) {
  const std::array<std::pair<std::string_view, int>, 15> table{{
      {"des", s.des}, {"asc", s.asc}, {"pk", s.pk}, {"pk1", s.pk1}, {"pk2", s.pk2},
      {"dd", s.dd}, {"da", s.da}, {"lmin", s.lmin}, {"rmin", s.rmin}, {"ldr", s.ldr},
      {"rar", s.rar}, {"mna", s.mna}, {"mnd", s.mnd}, {"st1", s.st1}, {"st2", s.st2},
  }};
  for (const auto& [key, value] : table)
    if (key == name) return value;
  std::string valid;
  for (const auto& n : perm_statistic_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown permutation statistic '" + std::string(name) + "'; valid names: " + valid);
}

int consecutive_pattern_count(const std::vector<int>& word, const std::vector<int>& pattern) {
  require_distinct(word);
  const std::size_t k = pattern.size();
  if (k == 0 || !Permutation(pattern).is_sn()) throw DomainError("pattern must be a permutation of [k]");
  int count = 0;
  for (std::size_t start = 0; start + k <= word.size(); ++start) {
    bool match = true;
    for (std::size_t a = 0; a < k && match; ++a) {
      // rank of word[start+a] inside the window
      int rank = 1;
      for (std::size_t b = 0; b < k; ++b)
        if (word[start + b] < word[start + a]) ++rank;
      match = rank == pattern[a];
    }
    if (match) ++count;
  }
  return count;
}

int st1(const Permutation& pi) {
  std::vector<int> w{0};
  w.insert(w.end(), pi.word().begin(), pi.word().end());
  return consecutive_pattern_count(w, {1, 3, 2, 4});
}

int st2(const Permutation& pi) {
  std::vector<int> w = pi.word();
  w.push_back(0);
  return consecutive_pattern_count(w, {3, 2, 4, 1});
}

namespace {

using BNode = LabeledBinaryTree::Node;

int lambda_rec(const std::vector<int>& w, std::size_t lo, std::size_t hi, std::vector<BNode>& out) {
  if (lo == hi) return kNoNode;
  const auto it = std::min_element(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
  const auto pos = static_cast<std::size_t>(it - w.begin());
  const int self = static_cast<int>(out.size());
  out.push_back(BNode{*it, kNoNode, 0, kNoNode, kNoNode, *it});
  const int l = lambda_rec(w, lo, pos, out);
  const int r = lambda_rec(w, pos + 1, hi, out);
  out[static_cast<std::size_t>(self)].left = l;
  out[static_cast<std::size_t>(self)].right = r;
  return self;
}

void inorder(const LabeledBinaryTree& t, int v, std::vector<int>& out) {
  if (v == kNoNode) return;
  inorder(t, t.node(v).left, out);
  out.push_back(t.node(v).label);
  inorder(t, t.node(v).right, out);
}

}  // namespace

LabeledBinaryTree lambda_map(const std::vector<int>& word) {
  if (word.empty()) throw DomainError("empty word");
  require_distinct(word);
  std::vector<BNode> nodes;
  nodes.reserve(word.size());
  lambda_rec(word, 0, word.size(), nodes);
  return LabeledBinaryTree::from_nodes(nodes, 0);
}

std::vector<int> lambda_inv(const LabeledBinaryTree& tree) {
  std::vector<int> labels;
  for (const auto& n : tree.nodes()) labels.push_back(n.label);
  require_distinct(labels);
  std::vector<int> out;
  out.reserve(tree.size());
  inorder(tree, 0, out);
  return out;
}

std::string peak_leaf_check(const Permutation& pi) {
  const auto s = perm_stats(pi);
  const int n = static_cast<int>(pi.size());
  const auto tree = lambda_map(pi.word());
  std::vector<int> where(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) where[static_cast<std::size_t>(tree.node(i).label)] = i;
  auto at = [&](int i) { return (i < 1 || i > n) ? 0 : pi[static_cast<std::size_t>(i - 1)]; };
  for (int i = 1; i <= n; ++i) {
    const int a = at(i - 1), b = at(i), c = at(i + 1);
    const int v = where[static_cast<std::size_t>(b)];
    const auto& node = tree.node(v);
    const bool leaf = tree.is_leaf(v);
    const bool left_leaf = leaf && tree.is_left_child(v);
    const bool right_leaf = leaf && tree.is_right_child(v);
    const bool only_left = node.left != kNoNode && node.right == kNoNode;
    const bool only_right = node.left == kNoNode && node.right != kNoNode;
    const bool peak = a < b && b > c;
    // A leaf root (n = 1) is a type-1 peak without a parent.
    const bool type1 = peak && a <= c;
    const bool type2 = peak && a > c;
    if (n > 1 && type1 != left_leaf) return "letter " + std::to_string(b) + ": type-1 peak vs left leaf disagree";
    if (type2 != right_leaf) return "letter " + std::to_string(b) + ": type-2 peak vs right leaf disagree";
    if ((a > b && b > c) != only_left) return "letter " + std::to_string(b) + ": double descent vs only-left node disagree";
    if ((a < b && b < c) != only_right) return "letter " + std::to_string(b) + ": double ascent vs only-right node disagree";
  }
  std::vector<int> front{0}, back = pi.word();
  front.insert(front.end(), pi.word().begin(), pi.word().end());
  back.push_back(0);
  if (n > 1 && s.pk1 != consecutive_pattern_count(front, {1, 3, 2})) return "pk1 differs from 132 count in 0pi";
  if (s.pk2 != consecutive_pattern_count(back, {2, 3, 1})) return "pk2 differs from 231 count in pi0";
  return {};
}

std::vector<Permutation> enumerate_permutations(int n) {
  if (n < 0) throw DomainError("n must be non-negative");
  std::vector<Permutation> out;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

bool is_312_avoiding(const Permutation& pi) {
  // 312 at (i, j, k) iff pi_j < pi_k < max(pi_1..pi_{j-1}).
  const auto& w = pi.word();
  const std::size_t n = w.size();
  int high = 0;
  for (std::size_t j = 1; j < n; ++j) {
    high = std::max(high, w[j - 1]);
    for (std::size_t k = j + 1; k < n; ++k)
      if (w[k] > w[j] && w[k] < high) return false;
  }
  return true;
}

std::vector<Permutation> enumerate_avoiding_312(int n) {
  if (n < 0) throw DomainError("n must be non-negative");
  if (n == 0) return {Permutation()};
  std::vector<Permutation> out;
  for (const auto& shape : binary_shapes(n)) out.push_back(from_shape(shape));
  std::sort(out.begin(), out.end());
  return out;
}

LabeledBinaryTree shape_of(const Permutation& pi) {
  if (!pi.is_sn() || pi.size() == 0) throw DomainError("not a permutation of [n]: " + render(pi));
  if (!is_312_avoiding(pi)) throw DomainError("permutation " + render(pi) + " contains 312");
  const auto t = lambda_map(pi.word());
  std::vector<BNode> nodes(t.nodes().begin(), t.nodes().end());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    nodes[i].label = 1;
    nodes[i].tag = static_cast<int>(i) + 1;
  }
  return LabeledBinaryTree::from_nodes(nodes, 0);
}

Permutation from_shape(const LabeledBinaryTree& shape) {
  std::vector<BNode> nodes(shape.nodes().begin(), shape.nodes().end());
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i].label = static_cast<int>(i) + 1;
  return Permutation(lambda_inv(LabeledBinaryTree::from_nodes(nodes, 0)));
}

Permutation Lambda(const Permutation& pi) { return from_shape(mirror(shape_of(pi))); }

Permutation Upsilon(const Permutation& pi) { return from_shape(psi(shape_of(pi))); }

}  // namespace treelab
