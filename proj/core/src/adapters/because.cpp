// BECauSE: brat standoff. Each causal frame is an E line whose trigger is the
// connective and whose Cause/Effect arguments are T spans. span1 is whichever
// argument comes first in the text.

#include <set>

#include "adapters/common.hpp"
#include "adapters/standoff.hpp"
#include "crest/adapters.hpp"

namespace crest {
namespace {

using detail::make_id;
using detail::skip;

const std::set<std::string, std::less<>> kCausalFrames = {"Consequence", "Motivation", "Purpose",
                                                          "Inference"};

}  // namespace

ParseResult parse_because(std::string_view ann, std::string_view txt, std::string_view doc_id) {
  const auto doc = standoff::parse(ann);
  const std::u32string text = text::to_u32(txt);
  ParseResult result;

  auto resolve = [&](const std::string& tid) -> const standoff::TextBound* {
    auto it = doc.spans.find(tid);
    if (it == doc.spans.end() || !standoff::matches_text(it->second, text)) return nullptr;
    return &it->second;
  };

  for (const auto& ev : doc.events) {
    ++result.candidates;
    const std::string id = make_id(doc_id, ev.id);
    if (!kCausalFrames.count(ev.type)) {
      result.skips.push_back(skip(id, SkipReason::excluded_relation_type, "frame type " + ev.type));
      continue;
    }
    if (ev.trigger.empty()) {
      result.skips.push_back(skip(id, SkipReason::malformed, "causal frame without a trigger"));
      continue;
    }
    const auto* trigger = resolve(ev.trigger);
    if (trigger == nullptr) {
      result.skips.push_back(skip(id, SkipReason::malformed,
                                  "trigger " + ev.trigger + " missing or offsets disagree with text"));
      continue;
    }
    if (detail::trim(trigger->text).empty()) {
      result.skips.push_back(skip(id, SkipReason::malformed, "empty trigger"));
      continue;
    }
    const auto cause_id = standoff::find_role(ev.args, "Cause");
    const auto effect_id = standoff::find_role(ev.args, "Effect");
    if (!cause_id || !effect_id) {
      result.skips.push_back(skip(id, SkipReason::malformed, "frame lacks a Cause or Effect argument"));
      continue;
    }
    const auto* cause = resolve(*cause_id);
    const auto* effect = resolve(*effect_id);
    if (cause == nullptr || effect == nullptr) {
      result.skips.push_back(skip(id, SkipReason::malformed,
                                  "argument missing or offsets disagree with text"));
      continue;
    }

    const bool cause_first = cause->fragments.front().start <= effect->fragments.front().start;
    const auto& first = cause_first ? *cause : *effect;
    const auto& second = cause_first ? *effect : *cause;
    CrestRelation rel = detail::sentence_relation(text, first.fragments, second.fragments,
                                                  trigger->fragments);
    rel.original_id = id;
    rel.label = kCausal;
    rel.direction = cause_first ? kSpan1CausesSpan2 : kSpan2CausesSpan1;
    result.relations.push_back(std::move(rel));
  }
  return result;
}

}  // namespace crest
