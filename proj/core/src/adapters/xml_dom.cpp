#include "adapters/xml_dom.hpp"

#include <expat.h>

#include "crest/error.hpp"

namespace crest::xml {
namespace {

struct Builder {
  std::unique_ptr<Node> root;
  std::vector<Node*> stack;
};

void on_start(void* data, const XML_Char* name, const XML_Char** atts) {
  auto* b = static_cast<Builder*>(data);
  auto node = std::make_unique<Node>();
  node->name = name;
  for (int i = 0; atts[i] != nullptr; i += 2) node->attrs[atts[i]] = atts[i + 1];
  Node* raw = node.get();
  if (b->stack.empty()) {
    b->root = std::move(node);
  } else {
    b->stack.back()->items.push_back({{}, std::move(node)});
  }
  b->stack.push_back(raw);
}

void on_end(void* data, const XML_Char*) {
  static_cast<Builder*>(data)->stack.pop_back();
}

void on_chars(void* data, const XML_Char* s, int len) {
  auto* b = static_cast<Builder*>(data);
  if (b->stack.empty()) return;
  auto& items = b->stack.back()->items;
  if (!items.empty() && !items.back().node) {
    items.back().text.append(s, static_cast<std::size_t>(len));
  } else {
    items.push_back({std::string(s, static_cast<std::size_t>(len)), nullptr});
  }
}

void collect(const Node& n, std::string_view name, std::vector<const Node*>& out) {
  for (const auto& item : n.items) {
    if (!item.node) continue;
    if (item.node->name == name) out.push_back(item.node.get());
    collect(*item.node, name, out);
  }
}

void flatten_into(const Node& n, FlatText& flat) {
  const auto start = static_cast<std::int64_t>(flat.text.size());
  for (const auto& item : n.items) {
    if (item.node) {
      flatten_into(*item.node, flat);
    } else {
      flat.text += text::to_u32(item.text);
    }
  }
  flat.ranges[&n] = {start, static_cast<std::int64_t>(flat.text.size())};
}

}  // namespace

std::string Node::attr(const std::string& key, const std::string& fallback) const {
  auto it = attrs.find(key);
  return it == attrs.end() ? fallback : it->second;
}

std::vector<const Node*> Node::children(std::string_view filter) const {
  std::vector<const Node*> out;
  for (const auto& item : items) {
    if (item.node && (filter.empty() || item.node->name == filter)) out.push_back(item.node.get());
  }
  return out;
}

std::vector<const Node*> Node::descendants(std::string_view name) const {
  std::vector<const Node*> out;
  collect(*this, name, out);
  return out;
}

const Node* Node::first(std::string_view name) const {
  if (this->name == name) return this;
  auto all = descendants(name);
  return all.empty() ? nullptr : all.front();
}

std::string Node::text() const {
  std::string out;
  for (const auto& item : items) out += item.node ? item.node->text() : item.text;
  return out;
}

std::unique_ptr<Node> parse(std::string_view xml) {
  Builder builder;
  XML_Parser parser = XML_ParserCreate("UTF-8");
  if (parser == nullptr) throw Error("cannot create XML parser");
  XML_SetUserData(parser, &builder);
  XML_SetElementHandler(parser, on_start, on_end);
  XML_SetCharacterDataHandler(parser, on_chars);
  const auto status = XML_Parse(parser, xml.data(), static_cast<int>(xml.size()), XML_TRUE);
  if (status != XML_STATUS_OK) {
    const std::string msg = "XML error at line " +
                            std::to_string(XML_GetCurrentLineNumber(parser)) + ": " +
                            XML_ErrorString(XML_GetErrorCode(parser));
    XML_ParserFree(parser);
    throw DataError("MALFORMED_XML", msg);
  }
  XML_ParserFree(parser);
  if (!builder.root) throw DataError("MALFORMED_XML", "document has no root element");
  return std::move(builder.root);
}

FlatText flatten(const Node& root) {
  FlatText flat;
  flatten_into(root, flat);
  return flat;
}

}  // namespace crest::xml
