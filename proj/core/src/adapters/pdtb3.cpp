// PDTB3 gold relation records: one relation per line, pipe-delimited, with
// the standard PDTB3 column layout. Columns used here (0-based):
//   0  relation type (Explicit, Implicit, AltLex, AltLexC, EntRel, NoRel, Hypophora)
//   1  connective span list, e.g. "120..131" or "5..9;20..24"
//   8  first sense, e.g. Contingency.Cause.Result
//   11 second sense (may be empty)
//   14 Arg1 span list
//   20 Arg2 span list
// Offsets index the raw document text.

#include <charconv>
#include <optional>
#include <set>

#include "adapters/common.hpp"
#include "crest/adapters.hpp"

namespace crest {
namespace {

using detail::make_id;
using detail::skip;

constexpr std::size_t kMinFields = 21;

std::optional<std::vector<Range>> parse_span_list(std::string_view s) {
  std::vector<Range> out;
  const std::string t = detail::trim(s);
  if (t.empty()) return out;
  for (auto part : detail::split(t, ';')) {
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) return std::nullopt;
    Range r;
    auto a = part.substr(0, dots);
    auto b = part.substr(dots + 2);
    auto [pa, ea] = std::from_chars(a.data(), a.data() + a.size(), r.start);
    auto [pb, eb] = std::from_chars(b.data(), b.data() + b.size(), r.end);
    if (ea != std::errc() || eb != std::errc() || pa != a.data() + a.size() ||
        pb != b.data() + b.size() || r.end < r.start) {
      return std::nullopt;
    }
    out.push_back(r);
  }
  return out;
}

enum class SenseKind { included, neg_result, undirected, other };

struct Sense {
  SenseKind kind = SenseKind::other;
  int direction = kNoDirection;
};

// Level-2 classes kept: Cause, Cause+Belief, Cause+SpeechAct. At level 3,
// Reason means Arg2 is the cause, Result means Arg1 is the cause.
Sense classify(std::string_view sense) {
  const std::string trimmed = detail::trim(sense);
  const auto parts = detail::split(trimmed, '.');
  static const std::set<std::string_view> kLevel2 = {"Cause", "Cause+Belief", "Cause+SpeechAct"};
  if (parts.size() < 2 || parts[0] != "Contingency" || !kLevel2.count(parts[1])) return {};
  if (parts.size() < 3) return {SenseKind::undirected, kNoDirection};
  const std::string_view level3 = parts[2];
  if (level3.rfind("NegResult", 0) == 0) return {SenseKind::neg_result, kNoDirection};
  if (level3.rfind("Reason", 0) == 0) return {SenseKind::included, kSpan2CausesSpan1};
  if (level3.rfind("Result", 0) == 0) return {SenseKind::included, kSpan1CausesSpan2};
  return {SenseKind::undirected, kNoDirection};
}

}  // namespace

ParseResult skip_missing_text(std::string_view records, std::string_view doc_id,
                              std::string_view detail) {
  ParseResult result;
  std::size_t lineno = 0;
  for (auto line : detail::split_lines(records)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    ++result.candidates;
    result.skips.push_back(skip(make_id(doc_id, std::to_string(lineno)), SkipReason::missing_text,
                                std::string(detail)));
  }
  return result;
}

ParseResult parse_pdtb3(std::string_view records, std::string_view raw_text,
                        std::string_view doc_id) {
  ParseResult result;
  const std::u32string doc = text::to_u32(raw_text);

  std::size_t lineno = 0;
  for (auto line : detail::split_lines(records)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    ++result.candidates;
    const std::string id = make_id(doc_id, std::to_string(lineno));
    const auto f = detail::split(line, '|');
    if (f.size() < kMinFields) {
      result.skips.push_back(skip(id, SkipReason::malformed,
                                  "expected at least 21 fields, got " + std::to_string(f.size())));
      continue;
    }

    const std::string type = detail::trim(f[0]);
    if (type != "Explicit" && type != "Implicit" && type != "AltLex" && type != "AltLexC") {
      result.skips.push_back(skip(id, SkipReason::excluded_relation_type, "relation type " + type));
      continue;
    }

    Sense chosen;
    bool saw_neg_result = false;
    for (std::size_t col : {std::size_t{8}, std::size_t{11}}) {
      const Sense s = classify(f[col]);
      if (s.kind == SenseKind::neg_result) saw_neg_result = true;
      if (s.kind == SenseKind::included || s.kind == SenseKind::undirected) {
        chosen = s;
        break;
      }
    }
    if (chosen.kind == SenseKind::other) {
      result.skips.push_back(skip(id, SkipReason::excluded_sense,
                                  saw_neg_result ? "NegResult sense: " + detail::trim(f[8])
                                                 : "sense outside Contingency.Cause*: " + detail::trim(f[8])));
      continue;
    }
    if (chosen.kind == SenseKind::undirected) {
      result.skips.push_back(skip(id, SkipReason::malformed, "causal sense without Reason/Result: " +
                                                                 detail::trim(f[8])));
      continue;
    }

    const auto conn = parse_span_list(f[1]);
    const auto arg1 = parse_span_list(f[14]);
    const auto arg2 = parse_span_list(f[20]);
    if (!conn || !arg1 || !arg2 || arg1->empty() || arg2->empty() ||
        !detail::in_bounds(*conn, doc.size()) || !detail::in_bounds(*arg1, doc.size()) ||
        !detail::in_bounds(*arg2, doc.size())) {
      result.skips.push_back(skip(id, SkipReason::malformed, "unparsable or out-of-range span list"));
      continue;
    }
    // Only connectives present in the text count as signals; the connective
    // inserted for an implicit relation does not.
    const std::vector<Range> signal = type == "Implicit" ? std::vector<Range>{} : *conn;

    CrestRelation rel = detail::sentence_relation(doc, *arg1, *arg2, signal);
    rel.original_id = id;
    rel.label = kCausal;
    rel.direction = chosen.direction;
    result.relations.push_back(std::move(rel));
  }
  return result;
}

}  // namespace crest
