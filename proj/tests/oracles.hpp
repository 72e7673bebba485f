#pragma once
// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library's enumeration, bijections or statistics.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct Tree {
  int label = 0;
  std::vector<Tree> kids;
};

inline std::string render(const Tree& t) {
  std::string s = std::to_string(t.label);
  if (t.kids.empty()) return s;
  s += '(';
  for (std::size_t i = 0; i < t.kids.size(); ++i) {
    if (i) s += ',';
    s += render(t.kids[i]);
  }
  return s + ')';
}

// Ordered forests with `nodes` nodes in total.
inline std::vector<std::vector<Tree>> forests(int nodes) {
  if (nodes == 0) return {{}};
  std::vector<std::vector<Tree>> out;
  // First tree of the forest has k nodes (its root plus k-1 below).
  for (int k = 1; k <= nodes; ++k) {
    for (const auto& below : forests(k - 1)) {
      for (const auto& rest : forests(nodes - k)) {
        std::vector<Tree> f;
        f.push_back(Tree{0, below});
        f.insert(f.end(), rest.begin(), rest.end());
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

inline std::vector<Tree> plane_shapes(int edges) {
  std::vector<Tree> out;
  for (auto& f : forests(edges)) out.push_back(Tree{0, f});
  return out;
}

inline void preorder(Tree& t, std::vector<Tree*>& out) {
  out.push_back(&t);
  for (auto& k : t.kids) preorder(k, out);
}

inline bool labels_ok(const Tree& t) {
  for (std::size_t i = 0; i < t.kids.size(); ++i) {
    if (t.kids[i].label < t.label) return false;
    if (i && t.kids[i].label > t.kids[i - 1].label) return false;
    if (!labels_ok(t.kids[i])) return false;
  }
  return true;
}

// Canonical encodings of every weakly increasing tree on the multiset given by
// multiplicities `mult` (value v occurs mult[v-1] times).
inline std::set<std::string> weakly_increasing_trees(const std::vector<int>& mult) {
  std::vector<int> labels;
  for (std::size_t v = 0; v < mult.size(); ++v) labels.insert(labels.end(), static_cast<std::size_t>(mult[v]), static_cast<int>(v) + 1);
  std::set<std::string> out;
  for (auto shape : plane_shapes(static_cast<int>(labels.size()))) {
    std::vector<Tree*> nodes;
    preorder(shape, nodes);
    auto perm = labels;
    do {
      for (std::size_t i = 0; i < perm.size(); ++i) nodes[i + 1]->label = perm[i];
      if (labels_ok(shape)) out.insert(render(shape));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

// Parser for the plane encoding, independent of the library.
inline Tree parse(const std::string& s, std::size_t& i) {
  Tree t;
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  t.label = std::stoi(s.substr(start, i - start));
  if (i < s.size() && s[i] == '(') {
    ++i;
    for (;;) {
      t.kids.push_back(parse(s, i));
      if (s[i] == ',') {
        ++i;
        continue;
      }
      ++i;  // ')'
      break;
    }
  }
  return t;
}

inline Tree parse(const std::string& s) {
  std::size_t i = 0;
  return parse(s, i);
}

struct Stats {
  std::map<std::string, int> counts;
  std::map<int, int> deg, od;
};

inline void collect(const Tree& t, const Tree* parent, std::size_t pos, bool parent_has_elder, int level, Stats& s) {
  auto& c = s.counts;
  const bool leaf = t.kids.empty();
  ++s.deg[static_cast<int>(t.kids.size())];
  if (level % 2 == 1) ++s.od[static_cast<int>(t.kids.size())];
  if (level % 2 == 0) {
    ++c["el"];
    ++c[leaf ? "elleaf" : "elint"];
  }
  if (leaf) ++c["leaf"];
  if (leaf && parent) {
    const auto& sib = parent->kids;
    if (pos + 1 == sib.size()) ++c["ystleaf"];
    if (pos == 0) {
      ++c["oleaf"];
      if (sib.size() == 1) {
        ++c["sleaf"];
        ++c[parent_has_elder ? "suleaf" : "snuleaf"];
      } else {
        ++c["eleaf"];
        ++c[sib[1].kids.empty() ? "etleaf" : "entleaf"];
      }
    } else {
      ++c["yleaf"];
      ++c[pos == 1 ? "syleaf" : "yerleaf"];
    }
  }
  if (!leaf) {
    // Singleton / elder internal: parent of a singleton / elder leaf.
    const bool old_is_leaf = t.kids[0].kids.empty();
    if (old_is_leaf && t.kids.size() == 1) ++c["sint"];
    else if (old_is_leaf) ++c["eint"];
    else ++c["yint"];
    if (old_is_leaf) ++c["oint"];
  }
  for (std::size_t i = 0; i < t.kids.size(); ++i) collect(t.kids[i], &t, i, pos > 0 && parent, level + 1, s);
}

inline Stats stats(const Tree& t) {
  Stats s;
  for (const char* k : {"sleaf", "eleaf", "yleaf", "sint", "eint", "yint", "oleaf", "oint", "leaf", "suleaf", "snuleaf",
                        "etleaf", "entleaf", "syleaf", "yerleaf", "ystleaf", "el", "elint", "elleaf"})
    s.counts[k] = 0;
  collect(t, nullptr, 0, false, 0, s);
  return s;
}

// ---- permutations ----

// Boundary zeros on both sides.
inline int at(const std::vector<int>& w, int i) {
  return (i < 1 || i > static_cast<int>(w.size())) ? 0 : w[static_cast<std::size_t>(i - 1)];
}

struct PermStats {
  int pk = 0, pk1 = 0, pk2 = 0, dd = 0, da = 0, val = 0;
  int des = 0, asc = 0, lmin = 0, rmin = 0, ldr = 0, rar = 0, mna = 0, mnd = 0;
};

// Largest subset of `idx` with no two consecutive integers, by trying every subset.
inline int max_non_overlapping(const std::vector<int>& idx) {
  int best = 0;
  const std::size_t k = idx.size();
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a)
      for (std::size_t b = a + 1; b < k && ok; ++b)
        if ((mask >> a & 1u) && (mask >> b & 1u) && std::abs(idx[a] - idx[b]) == 1) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

inline PermStats perm_stats(const std::vector<int>& w) {
  PermStats s;
  const int n = static_cast<int>(w.size());
  for (int i = 1; i <= n; ++i) {
    const int a = at(w, i - 1), b = at(w, i), c = at(w, i + 1);
    if (a < b && b > c) {
      ++s.pk;
      ++(a <= c ? s.pk1 : s.pk2);
    } else if (a > b && b > c) {
      ++s.dd;
    } else if (a < b && b < c) {
      ++s.da;
    } else {
      ++s.val;
    }
  }
  std::vector<int> asc, des;
  for (int i = 1; i < n; ++i) (w[i - 1] < w[i] ? asc : des).push_back(i);
  s.asc = static_cast<int>(asc.size());
  s.des = static_cast<int>(des.size());
  s.mna = max_non_overlapping(asc);
  s.mnd = max_non_overlapping(des);
  for (int i = 0; i < n; ++i) {
    bool left = true, right = true;
    for (int j = 0; j < i; ++j) left = left && w[j] > w[i];
    for (int j = i + 1; j < n; ++j) right = right && w[j] > w[i];
    s.lmin += left;
    s.rmin += right;
  }
  for (int j = n; j >= 1; --j) {
    bool dec = true;
    for (int i = 1; i < j; ++i) dec = dec && w[i - 1] > w[i];
    if (dec) {
      s.ldr = j;
      break;
    }
  }
  for (int j = n; j >= 1; --j) {
    bool inc = true;
    for (int i = n - j + 1; i < n; ++i) inc = inc && w[i - 1] < w[i];
    if (inc) {
      s.rar = j;
      break;
    }
  }
  return s;
}

// Windows whose pairwise order matches the pattern's.
inline int pattern_count(const std::vector<int>& w, const std::vector<int>& p) {
  const std::size_t k = p.size();
  int count = 0;
  for (std::size_t s = 0; s + k <= w.size(); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a)
      for (std::size_t b = 0; b < k && ok; ++b) ok = (w[s + a] < w[s + b]) == (p[a] < p[b]);
    count += ok;
  }
  return count;
}

inline bool contains_312(const std::vector<int>& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (w[i] > w[k] && w[k] > w[j]) return true;
  return false;
}

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<int>> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace oracle
