// COPA: every well-formed item yields two relations, the premise paired with
// the more plausible alternative (causal) and with the other one
// (non-causal). The context is "<premise> <alternative>".

#include "adapters/common.hpp"
#include "adapters/xml_dom.hpp"
#include "crest/adapters.hpp"

namespace crest {
namespace {

using detail::make_id;
using detail::skip;

CrestRelation pair_relation(const std::string& premise, const std::string& alternative) {
  const std::u32string p = text::to_u32(premise);
  const std::u32string a = text::to_u32(alternative);
  const std::u32string context = p + U" " + a;
  const auto plen = static_cast<std::int64_t>(p.size());
  return detail::windowed_relation(context, {0, static_cast<std::int64_t>(context.size())},
                                   {{0, plen}},
                                   {{plen + 1, static_cast<std::int64_t>(context.size())}}, {});
}

}  // namespace

ParseResult parse_copa(std::string_view xml_text, std::string_view doc_id) {
  const auto root = xml::parse(xml_text);
  ParseResult result;

  std::size_t ordinal = 0;
  for (const auto* item : root->descendants("item")) {
    ++ordinal;
    const std::string item_id = item->attr("id", std::to_string(ordinal));
    const auto premises = item->children("p");
    const auto a1 = item->children("a1");
    const auto a2 = item->children("a2");
    const auto extra = item->children("a3");
    const std::string asks = item->attr("asks-for");
    const std::string best = item->attr("most-plausible-alternative");

    std::string problem;
    if (premises.size() != 1) problem = "item needs exactly one premise";
    else if (a1.size() != 1 || a2.size() != 1 || !extra.empty()) problem = "item needs exactly two alternatives";
    else if (asks != "cause" && asks != "effect") problem = "asks-for must be cause or effect";
    else if (best != "1" && best != "2") problem = "most-plausible-alternative must be 1 or 2";

    if (!problem.empty()) {
      ++result.candidates;
      result.skips.push_back(skip(make_id(doc_id, item_id), SkipReason::malformed, problem));
      continue;
    }

    result.candidates += 2;
    const std::string premise = detail::trim(premises.front()->text());
    const std::string alts[2] = {detail::trim(a1.front()->text()), detail::trim(a2.front()->text())};
    const int chosen = best == "1" ? 0 : 1;
    for (int k = 0; k < 2; ++k) {
      CrestRelation rel = pair_relation(premise, alts[k]);
      rel.original_id = make_id(doc_id, item_id + ":a" + std::to_string(k + 1));
      if (k == chosen) {
        rel.label = kCausal;
        // asks-for=effect: the premise causes the alternative.
        rel.direction = asks == "effect" ? kSpan1CausesSpan2 : kSpan2CausesSpan1;
      } else {
        rel.label = kNonCausal;
        rel.direction = kNoDirection;
      }
      result.relations.push_back(std::move(rel));
    }
  }
  return result;
}

}  // namespace crest
