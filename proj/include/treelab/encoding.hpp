#pragma once

// Text and JSON encodings of both tree kinds.
//
//   plane:   tree  := label | label "(" tree { "," tree } ")"
//   binary:  btree := label | label "(" child ";" child ")"
//            child := btree | "-"
//
// Whitespace is insignificant on input; rendering is canonical (no
// whitespace, leaves as a bare label). Parsed nodes get tag = preorder index
// for plane trees and preorder index + 1 for binary trees, so that the binary
// image of a plane tree and a freshly parsed binary tree agree on tags.

#include <string>
#include <string_view>

#include <json.hpp>

#include "treelab/trees.hpp"

namespace treelab {

using Json = nlohmann::ordered_json;

std::string render(const WeaklyIncreasingTree& tree);
std::string render(const LabeledBinaryTree& tree);

// Both throw ParseError with the byte offset of the first offending character.
WeaklyIncreasingTree parse_wit(std::string_view text);
LabeledBinaryTree parse_binary(std::string_view text);

// [label, [children...]]
Json to_json(const WeaklyIncreasingTree& tree);
// [label, left | null, right | null]
Json to_json(const LabeledBinaryTree& tree);

WeaklyIncreasingTree wit_from_json(const Json& value);
LabeledBinaryTree binary_from_json(const Json& value);

}  // namespace treelab
