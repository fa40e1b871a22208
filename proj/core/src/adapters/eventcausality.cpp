// EventCausality: brat-style standoff with two link types, C (causality) and
// R (relatedness). Arg1 of a C link is the cause. R links are dropped.

#include "adapters/common.hpp"
#include "adapters/standoff.hpp"
#include "crest/adapters.hpp"

namespace crest {

ParseResult parse_eventcausality(std::string_view ann, std::string_view txt,
                                 std::string_view doc_id) {
  using detail::make_id;
  using detail::skip;

  const auto doc = standoff::parse(ann);
  const std::u32string text = text::to_u32(txt);
  ParseResult result;

  for (const auto& link : doc.relations) {
    ++result.candidates;
    const std::string id = make_id(doc_id, link.id);
    if (link.type != "C") {
      result.skips.push_back(skip(id, SkipReason::excluded_relation_type,
                                  link.type == "R" ? "relatedness link" : "link type " + link.type));
      continue;
    }
    auto arg = [&](std::string_view role, std::string_view alias) -> const standoff::TextBound* {
      auto tid = standoff::find_role(link.args, role);
      if (!tid) tid = standoff::find_role(link.args, alias);
      if (!tid) return nullptr;
      auto it = doc.spans.find(*tid);
      if (it == doc.spans.end() || !standoff::matches_text(it->second, text)) return nullptr;
      return &it->second;
    };
    const auto* cause = arg("Arg1", "Cause");
    const auto* effect = arg("Arg2", "Effect");
    if (cause == nullptr || effect == nullptr) {
      result.skips.push_back(skip(id, SkipReason::malformed, "dangling or misaligned event span"));
      continue;
    }
    CrestRelation rel = detail::sentence_relation(text, cause->fragments, effect->fragments, {});
    rel.original_id = id;
    rel.label = kCausal;
    rel.direction = kSpan1CausesSpan2;
    result.relations.push_back(std::move(rel));
  }
  return result;
}

}  // namespace crest
