#pragma once

// Minimal DOM built with expat. Mixed content keeps its order so inline
// annotation formats (TimeML) can be flattened back to text with offsets.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "crest/text.hpp"

namespace crest::xml {

struct Node;

struct Item {
  std::string text;            // set when node is null
  std::unique_ptr<Node> node;
};

struct Node {
  std::string name;
  std::map<std::string, std::string> attrs;
  std::vector<Item> items;

  std::string attr(const std::string& key, const std::string& fallback = "") const;
  bool has_attr(const std::string& key) const { return attrs.count(key) != 0; }

  // Direct element children, optionally filtered by name.
  std::vector<const Node*> children(std::string_view name = {}) const;
  // All descendant elements with this name, document order.
  std::vector<const Node*> descendants(std::string_view name) const;
  const Node* first(std::string_view name) const;

  // Concatenated character data of the subtree.
  std::string text() const;
};

// Throws DataError (MALFORMED_XML) with expat's line and message.
std::unique_ptr<Node> parse(std::string_view xml);

// Character data of a subtree as code points, with the code point range
// covered by every element in it.
struct FlatText {
  std::u32string text;
  std::unordered_map<const Node*, text::Range> ranges;
};
FlatText flatten(const Node& root);

}  // namespace crest::xml
