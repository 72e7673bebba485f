#include "treelab/encoding.hpp"

#include <cctype>

#include "treelab/errors.hpp"

namespace treelab {

namespace {

void render_wit(const WeaklyIncreasingTree& t, int i, std::string& out) {
  const auto& n = t.node(i);
  out += std::to_string(n.label);
  if (n.children.empty()) return;
  out += '(';
  for (std::size_t c = 0; c < n.children.size(); ++c) {
    if (c) out += ',';
    render_wit(t, n.children[c], out);
  }
  out += ')';
}

void render_binary(const LabeledBinaryTree& t, int i, std::string& out) {
  const auto& n = t.node(i);
  out += std::to_string(n.label);
  if (n.left == kNoNode && n.right == kNoNode) return;
  out += '(';
  if (n.left == kNoNode) out += '-'; else render_binary(t, n.left, out);
  out += ';';
  if (n.right == kNoNode) out += '-'; else render_binary(t, n.right, out);
  out += ')';
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool at_end() { return peek() == '\0' && pos_ >= text_.size(); }
  std::size_t position() const { return pos_; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  int label() {
    skip_ws();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) fail("label too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a label");
    return static_cast<int>(value);
  }

  [[noreturn]] void fail(const std::string& what) {
    std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw ParseError(what + ", found " + found, pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int parse_wit_node(Cursor& cur, std::vector<WeaklyIncreasingTree::Node>& nodes) {
  const int self = static_cast<int>(nodes.size());
  nodes.push_back({});
  nodes[static_cast<std::size_t>(self)].label = cur.label();
  if (cur.consume('(')) {
    do {
      const int child = parse_wit_node(cur, nodes);
      nodes[static_cast<std::size_t>(self)].children.push_back(child);
    } while (cur.consume(','));
    cur.expect(')');
  }
  return self;
}

int parse_binary_node(Cursor& cur, std::vector<LabeledBinaryTree::Node>& nodes) {
  const int self = static_cast<int>(nodes.size());
  nodes.push_back({});
  nodes[static_cast<std::size_t>(self)].label = cur.label();
  if (cur.consume('(')) {
    auto child = [&]() -> int {
      if (cur.consume('-')) return kNoNode;
      if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail("expected a subtree or '-'");
      return parse_binary_node(cur, nodes);
    };
    const int left = child();
    nodes[static_cast<std::size_t>(self)].left = left;
    cur.expect(';');
    const int right = child();
    nodes[static_cast<std::size_t>(self)].right = right;
    cur.expect(')');
  }
  return self;
}

}  // namespace

std::string render(const WeaklyIncreasingTree& tree) {
  std::string out;
  render_wit(tree, 0, out);
  return out;
}

std::string render(const LabeledBinaryTree& tree) {
  std::string out;
  render_binary(tree, 0, out);
  return out;
}

// Parsing appends nodes in preorder already, so the index is the tag.
WeaklyIncreasingTree parse_wit(std::string_view text) {
  Cursor cur(text);
  std::vector<WeaklyIncreasingTree::Node> nodes;
  parse_wit_node(cur, nodes);
  if (!cur.at_end()) cur.fail("trailing characters");
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i].tag = static_cast<int>(i);
  return WeaklyIncreasingTree::from_nodes(nodes, 0);
}

LabeledBinaryTree parse_binary(std::string_view text) {
  Cursor cur(text);
  std::vector<LabeledBinaryTree::Node> nodes;
  parse_binary_node(cur, nodes);
  if (!cur.at_end()) cur.fail("trailing characters");
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i].tag = static_cast<int>(i) + 1;
  return LabeledBinaryTree::from_nodes(nodes, 0);
}

namespace {

Json wit_json(const WeaklyIncreasingTree& t, int i) {
  Json children = Json::array();
  for (int c : t.node(i).children) children.push_back(wit_json(t, c));
  return Json::array({t.node(i).label, std::move(children)});
}

Json binary_json(const LabeledBinaryTree& t, int i) {
  const auto& n = t.node(i);
  return Json::array({n.label, n.left == kNoNode ? Json(nullptr) : binary_json(t, n.left),
                      n.right == kNoNode ? Json(nullptr) : binary_json(t, n.right)});
}

int label_from_json(const Json& v) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw DomainError("tree JSON: label must be a non-negative integer");
  return v.get<int>();
}

int wit_from_json_rec(const Json& v, std::vector<WeaklyIncreasingTree::Node>& nodes) {
  if (!v.is_array() || v.size() != 2 || !v[1].is_array()) throw DomainError("tree JSON: expected [label, [children...]]");
  const int self = static_cast<int>(nodes.size());
  nodes.push_back({});
  nodes.back().label = label_from_json(v[0]);
  for (const auto& c : v[1]) {
    const int child = wit_from_json_rec(c, nodes);
    nodes[static_cast<std::size_t>(self)].children.push_back(child);
  }
  return self;
}

int binary_from_json_rec(const Json& v, std::vector<LabeledBinaryTree::Node>& nodes) {
  if (!v.is_array() || v.size() != 3) throw DomainError("tree JSON: expected [label, left, right]");
  const int self = static_cast<int>(nodes.size());
  nodes.push_back({});
  nodes.back().label = label_from_json(v[0]);
  if (!v[1].is_null()) {
    const int l = binary_from_json_rec(v[1], nodes);
    nodes[static_cast<std::size_t>(self)].left = l;
  }
  if (!v[2].is_null()) {
    const int r = binary_from_json_rec(v[2], nodes);
    nodes[static_cast<std::size_t>(self)].right = r;
  }
  return self;
}

}  // namespace

Json to_json(const WeaklyIncreasingTree& tree) { return wit_json(tree, 0); }
Json to_json(const LabeledBinaryTree& tree) { return binary_json(tree, 0); }

WeaklyIncreasingTree wit_from_json(const Json& value) {
  std::vector<WeaklyIncreasingTree::Node> nodes;
  wit_from_json_rec(value, nodes);
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i].tag = static_cast<int>(i);
  return WeaklyIncreasingTree::from_nodes(nodes, 0);
}

LabeledBinaryTree binary_from_json(const Json& value) {
  std::vector<LabeledBinaryTree::Node> nodes;
  binary_from_json_rec(value, nodes);
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i].tag = static_cast<int>(i) + 1;
  return LabeledBinaryTree::from_nodes(nodes, 0);
}

}  // namespace treelab
