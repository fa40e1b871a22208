// CaTeRS: brat standoff over a short story. Relation lines link two event
// spans; CAUSE_* and ENABLE_* links are causal with Arg1 as the cause.
// Temporal-only links and the negative causal classes (PREVENT_*,
// CAUSE_TO_END_*) are skipped.

#include "adapters/common.hpp"
#include "adapters/standoff.hpp"
#include "crest/adapters.hpp"

namespace crest {
namespace {

using detail::make_id;
using detail::skip;

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

bool causal_link(std::string_view type) {
  if (starts_with(type, "CAUSE_TO_END")) return false;
  return starts_with(type, "CAUSE_") || starts_with(type, "ENABLE_") || type == "CAUSE" ||
         type == "ENABLE";
}

}  // namespace

ParseResult parse_caters(std::string_view ann, std::string_view txt, std::string_view doc_id) {
  const auto doc = standoff::parse(ann);
  const std::u32string text = text::to_u32(txt);
  ParseResult result;

  for (const auto& link : doc.relations) {
    ++result.candidates;
    const std::string id = make_id(doc_id, link.id);
    if (!causal_link(link.type)) {
      result.skips.push_back(skip(id, SkipReason::excluded_relation_type, "link type " + link.type));
      continue;
    }
    const auto a1 = standoff::find_role(link.args, "Arg1");
    const auto a2 = standoff::find_role(link.args, "Arg2");
    const standoff::TextBound* cause = nullptr;
    const standoff::TextBound* effect = nullptr;
    if (a1 && a2) {
      auto i1 = doc.spans.find(*a1);
      auto i2 = doc.spans.find(*a2);
      if (i1 != doc.spans.end() && standoff::matches_text(i1->second, text)) cause = &i1->second;
      if (i2 != doc.spans.end() && standoff::matches_text(i2->second, text)) effect = &i2->second;
    }
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
