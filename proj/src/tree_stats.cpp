#include "treelab/tree_stats.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

#include "treelab/bijections.hpp"
#include "treelab/encoding.hpp"

namespace treelab {

int WitStatVector::deg_at(int q) const {
  auto it = deg.find(q);
  return it == deg.end() ? 0 : it->second;
}

int WitStatVector::od_at(int q) const {
  auto it = od.find(q);
  return it == od.end() ? 0 : it->second;
}

WitStatVector wit_stats(const WeaklyIncreasingTree& t) {
  WitStatVector s;
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    const int i = static_cast<int>(idx);
    const auto& n = t.node(i);
    const int degree = static_cast<int>(n.children.size());
    const bool even = n.depth % 2 == 0;
    ++s.deg[degree];
    if (!even) ++s.od[degree];
    if (even) {
      ++s.el;
      if (degree == 0) ++s.elleaf; else ++s.elint;
    }

    if (degree > 0) {
      const int eldest = n.children.front();
      if (!t.is_leaf(eldest)) ++s.yint;
      else if (degree == 1) ++s.sint;
      else ++s.eint;
      continue;
    }

    ++s.leaf;
    if (n.parent == kNoNode) continue;
    const auto& parent = t.node(n.parent);
    const int pos = t.sibling_index(i);
    if (pos + 1 == static_cast<int>(parent.children.size())) ++s.ystleaf;
    if (pos == 0) {
      if (parent.children.size() == 1) {
        ++s.sleaf;
        if (t.sibling_index(n.parent) > 0) ++s.suleaf; else ++s.snuleaf;
      } else {
        ++s.eleaf;
        if (t.is_leaf(parent.children[1])) ++s.etleaf; else ++s.entleaf;
      }
    } else {
      ++s.yleaf;
      if (pos == 1) ++s.syleaf; else ++s.yerleaf;
    }
  }
  s.oleaf = s.sleaf + s.eleaf;
  s.oint = s.sint + s.eint;
  return s;
}

BinaryStatVector binary_stats(const LabeledBinaryTree& t) {
  BinaryStatVector s;
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    const int i = static_cast<int>(idx);
    const auto& n = t.node(i);
    const bool has_left = n.left != kNoNode;
    const bool has_right = n.right != kNoNode;
    if (!has_left && !has_right) {
      ++s.leaf_count;
      if (n.parent == kNoNode) continue;
      const auto& p = t.node(n.parent);
      if (p.left == i) {
        ++s.left_leaf;
        if (p.right == kNoNode) ++s.ll_parent_no_right; else ++s.ll_parent_has_right;
      } else {
        ++s.right_leaf;
        if (p.left == kNoNode) ++s.rl_parent_no_left; else ++s.rl_parent_has_left;
      }
      continue;
    }
    if (has_left && !has_right) {
      ++s.only_left;
      if (t.node(n.left).left != kNoNode) ++s.ol_left_has_left; else ++s.ol_left_no_left;
    } else if (!has_left && has_right) {
      ++s.only_right;
    } else if (t.is_leaf(n.left) && t.is_leaf(n.right)) {
      ++s.twin;
    }
  }
  return s;
}

namespace {

using Kind = StatisticId::Kind;

constexpr std::array<std::pair<const char*, Kind>, 19> kPlainNames{{
    {"sleaf", Kind::sleaf},     {"eleaf", Kind::eleaf},     {"yleaf", Kind::yleaf},   {"sint", Kind::sint},
    {"eint", Kind::eint},       {"yint", Kind::yint},       {"oleaf", Kind::oleaf},   {"oint", Kind::oint},
    {"leaf", Kind::leaf},       {"suleaf", Kind::suleaf},   {"snuleaf", Kind::snuleaf}, {"etleaf", Kind::etleaf},
    {"entleaf", Kind::entleaf}, {"syleaf", Kind::syleaf},   {"yerleaf", Kind::yerleaf}, {"ystleaf", Kind::ystleaf},
    {"el", Kind::el},           {"elint", Kind::elint},     {"elleaf", Kind::elleaf},
}};

std::string valid_names_text() {
  std::string out;
  for (const auto& n : statistic_names()) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

const std::vector<std::string>& statistic_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, kind] : kPlainNames) v.emplace_back(name);
    v.emplace_back("deg:<q>");
    v.emplace_back("od:<q>");
    return v;
  }();
  return names;
}

StatisticId parse_statistic(std::string_view name) {
  for (const auto& [text, kind] : kPlainNames) {
    if (name == text) return StatisticId{kind, 0};
  }
  for (auto [prefix, kind] : {std::pair{std::string_view("deg:"), Kind::deg}, std::pair{std::string_view("od:"), Kind::od}}) {
    if (name.substr(0, prefix.size()) != prefix) continue;
    auto digits = name.substr(prefix.size());
    int q = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
    if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size() && q >= 0) return StatisticId{kind, q};
  }
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'; valid names: " + valid_names_text());
}

std::string statistic_name(StatisticId id) {
  if (id.kind == Kind::deg) return "deg:" + std::to_string(id.q);
  if (id.kind == Kind::od) return "od:" + std::to_string(id.q);
  for (const auto& [text, kind] : kPlainNames)
    if (kind == id.kind) return text;
  return "?";
}

int statistic_value(const WitStatVector& s, StatisticId id) {
  switch (id.kind) {
    case Kind::sleaf: return s.sleaf;
    case Kind::eleaf: return s.eleaf;
    case Kind::yleaf: return s.yleaf;
    case Kind::sint: return s.sint;
    case Kind::eint: return s.eint;
    case Kind::yint: return s.yint;
    case Kind::oleaf: return s.oleaf;
    case Kind::oint: return s.oint;
    case Kind::leaf: return s.leaf;
    case Kind::suleaf: return s.suleaf;
    case Kind::snuleaf: return s.snuleaf;
    case Kind::etleaf: return s.etleaf;
    case Kind::entleaf: return s.entleaf;
    case Kind::syleaf: return s.syleaf;
    case Kind::yerleaf: return s.yerleaf;
    case Kind::ystleaf: return s.ystleaf;
    case Kind::el: return s.el;
    case Kind::elint: return s.elint;
    case Kind::elleaf: return s.elleaf;
    case Kind::deg: return s.deg_at(id.q);
    case Kind::od: return s.od_at(id.q);
  }
  return 0;
}

std::string default_variable(StatisticId id) {
  switch (id.kind) {
    case Kind::sleaf: return "u1";
    case Kind::etleaf: return "u2";
    case Kind::entleaf: return "u3";
    case Kind::yerleaf: return "v1";
    case Kind::syleaf: return "v2";
    case Kind::oleaf: return "x1";
    case Kind::yleaf: return "x2";
    case Kind::oint: return "y1";
    case Kind::yint: return "y2";
    case Kind::eleaf: return "w1";
    case Kind::sint: return "w2";
    case Kind::eint: return "w3";
    case Kind::leaf: return "l";
    case Kind::suleaf: return "s1";
    case Kind::snuleaf: return "s2";
    case Kind::ystleaf: return "q";
    case Kind::el: return "e0";
    case Kind::elint: return "e1";
    case Kind::elleaf: return "e2";
    case Kind::deg: return "d" + std::to_string(id.q);
    case Kind::od: return "o" + std::to_string(id.q);
  }
  return "t";
}

std::string describe(const TransportMismatch& m) {
  return m.statistic + ": plane tree has " + std::to_string(m.plane_value) + ", binary image has " +
         std::to_string(m.binary_value);
}

std::optional<TransportMismatch> transport_check_leaf_kinds(const WeaklyIncreasingTree& tree) {
  const auto w = wit_stats(tree);
  const auto b = binary_stats(rho(tree));
  const std::array<TransportMismatch, 5> pairs{{
      {"sleaf", w.sleaf, b.right_leaf},
      {"eleaf", w.eleaf, b.left_leaf},
      {"yleaf", w.yleaf, b.only_left},
      {"yint", w.yint, b.only_right},
      {"oleaf", w.oleaf, b.leaf_count},
  }};
  for (const auto& p : pairs)
    if (p.plane_value != p.binary_value) return p;
  return std::nullopt;
}

std::optional<TransportMismatch> transport_check_refined(const WeaklyIncreasingTree& tree) {
  const auto w = wit_stats(tree);
  const auto b = binary_stats(rho(tree));
  const std::array<TransportMismatch, 6> pairs{{
      {"suleaf", w.suleaf, b.rl_parent_has_left},
      {"snuleaf", w.snuleaf, b.rl_parent_no_left},
      {"etleaf", w.etleaf, b.ll_parent_no_right},
      {"entleaf", w.entleaf, b.ll_parent_has_right},
      {"yerleaf", w.yerleaf, b.ol_left_has_left},
      {"syleaf", w.syleaf, b.ol_left_no_left},
  }};
  for (const auto& p : pairs)
    if (p.plane_value != p.binary_value) return p;
  return std::nullopt;
}

std::optional<TransportMismatch> transport_check(const WeaklyIncreasingTree& tree) {
  if (auto m = transport_check_leaf_kinds(tree)) return m;
  return transport_check_refined(tree);
}

}  // namespace treelab
