// EventStoryLine CAT XML. Tokens carry their sentence number; the context of
// a link is the run of sentences from the first to the last one touched by
// either mention (or the signal), tokens joined by single spaces.

#include <algorithm>
#include <map>
#include <optional>

#include "adapters/common.hpp"
#include "adapters/xml_dom.hpp"
#include "crest/adapters.hpp"
#include "crest/error.hpp"

namespace crest {
namespace {

using detail::make_id;
using detail::skip;

struct Token {
  long id;
  long sentence;
  std::string text;
};

std::optional<long> to_long(const std::string& s) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

ParseResult parse_eventstoryline(std::string_view xml_text, std::string_view doc_id) {
  const auto root = xml::parse(xml_text);
  ParseResult result;

  std::map<long, Token> tokens;  // t_id -> token, ordered
  for (const auto* t : root->descendants("token")) {
    const auto id = to_long(t->attr("t_id"));
    const auto sentence = to_long(t->attr("sentence", "0"));
    if (!id || !sentence) throw DataError("MALFORMED_XML", "token without numeric t_id/sentence");
    tokens[*id] = {*id, *sentence, t->text()};
  }

  std::map<std::string, std::vector<long>> mentions;  // m_id -> token ids
  if (const auto* markables = root->first("Markables")) {
    for (const auto* m : markables->children()) {
      std::vector<long> ids;
      for (const auto* anchor : m->descendants("token_anchor")) {
        if (auto id = to_long(anchor->attr("t_id"))) ids.push_back(*id);
      }
      std::sort(ids.begin(), ids.end());
      mentions[m->attr("m_id")] = std::move(ids);
    }
  }

  const auto* relations = root->first("Relations");
  const auto links = relations ? relations->descendants("PLOT_LINK") : std::vector<const xml::Node*>{};
  std::size_t ordinal = 0;
  for (const auto* link : links) {
    ++ordinal;
    ++result.candidates;
    const std::string id = make_id(doc_id, link->attr("r_id", "plot" + std::to_string(ordinal)));
    const std::string type = link->attr("relType");
    if (type != "PRECONDITION" && type != "FALLING_ACTION") {
      result.skips.push_back(skip(id, SkipReason::excluded_relation_type,
                                  "PLOT_LINK relType \"" + type + "\""));
      continue;
    }

    auto resolve = [&](const char* role) -> const std::vector<long>* {
      const auto* el = link->first(role);
      if (el == nullptr) return nullptr;
      auto it = mentions.find(el->attr("m_id"));
      if (it == mentions.end() || it->second.empty()) return nullptr;
      for (long t : it->second) {
        if (!tokens.count(t)) return nullptr;
      }
      return &it->second;
    };
    const auto* source = resolve("source");
    const auto* target = resolve("target");
    if (source == nullptr || target == nullptr) {
      result.skips.push_back(skip(id, SkipReason::malformed, "dangling mention reference"));
      continue;
    }
    const std::vector<long>* signal = nullptr;
    if (link->has_attr("signal") && !link->attr("signal").empty()) {
      auto it = mentions.find(link->attr("signal"));
      if (it == mentions.end() || it->second.empty()) {
        result.skips.push_back(skip(id, SkipReason::malformed, "dangling signal reference"));
        continue;
      }
      signal = &it->second;
    }

    long first_sentence = tokens.at(source->front()).sentence;
    long last_sentence = first_sentence;
    for (const auto* group : {source, target, signal}) {
      if (group == nullptr) continue;
      for (long t : *group) {
        first_sentence = std::min(first_sentence, tokens.at(t).sentence);
        last_sentence = std::max(last_sentence, tokens.at(t).sentence);
      }
    }

    std::u32string context;
    std::map<long, Range> where;
    for (const auto& [tid, tok] : tokens) {
      if (tok.sentence < first_sentence || tok.sentence > last_sentence) continue;
      if (!context.empty()) context.push_back(U' ');
      const auto start = static_cast<std::int64_t>(context.size());
      context += text::to_u32(tok.text);
      where[tid] = {start, static_cast<std::int64_t>(context.size())};
    }
    auto ranges = [&](const std::vector<long>* group) {
      std::vector<Range> out;
      if (group != nullptr) {
        for (long t : *group) out.push_back(where.at(t));
      }
      return out;
    };

    CrestRelation rel = detail::windowed_relation(
        context, {0, static_cast<std::int64_t>(context.size())}, ranges(source), ranges(target),
        ranges(signal));
    rel.original_id = id;
    rel.label = kCausal;
    // PRECONDITION: source enables or causes target. FALLING_ACTION: source is
    // a consequence of target.
    rel.direction = type == "PRECONDITION" ? kSpan1CausesSpan2 : kSpan2CausesSpan1;
    result.relations.push_back(std::move(rel));
  }
  return result;
}

}  // namespace crest
