#include "crest/relation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "crest/error.hpp"

namespace crest {
namespace {

void add_issue(ValidationReport& report, IssueCode code, std::string_view field,
               std::string detail) {
  for (const auto& issue : report) {
    if (issue.code == code && issue.field == field) return;
  }
  report.push_back({code, std::string(field), std::move(detail)});
}

struct SpanCheck {
  bool usable = false;  // offsets trustworthy enough for extent checks
};

SpanCheck check_span(const TokenSpan& span, std::string_view field, bool required,
                     const std::string& context, const text::CodePoints& cps,
                     Normalization policy, ValidationReport& report) {
  if (span.tokens.empty() && span.offsets.empty()) {
    if (required) add_issue(report, IssueCode::empty_span, field, "span has no tokens");
    return {};
  }
  if (span.tokens.size() != span.offsets.size()) {
    add_issue(report, IssueCode::offset_count_mismatch, field,
              std::to_string(span.tokens.size()) + " tokens vs " +
                  std::to_string(span.offsets.size()) + " offsets");
    return {};
  }
  const auto len = static_cast<std::int64_t>(cps.size());
  bool usable = true;
  for (std::size_t i = 0; i < span.tokens.size(); ++i) {
    const Range r = span.offsets[i];
    if (r.start < 0 || r.start >= r.end || r.end > len) {
      add_issue(report, IssueCode::offset_out_of_range, field,
                "[" + std::to_string(r.start) + "," + std::to_string(r.end) +
                    ") outside context of length " + std::to_string(len));
      usable = false;
      continue;
    }
    std::string_view slice = cps.slice(context, static_cast<std::size_t>(r.start),
                                       static_cast<std::size_t>(r.end));
    bool same = slice == span.tokens[i];
    if (!same && policy == Normalization::nfc_collapse_whitespace) {
      same = text::nfc(slice) == text::nfc(span.tokens[i]);
    }
    if (!same) {
      add_issue(report, IssueCode::offset_mismatch, field,
                "context slice \"" + std::string(slice) + "\" != token \"" +
                    span.tokens[i] + "\"");
    }
    if (i > 0) {
      const Range prev = span.offsets[i - 1];
      if (r.start < prev.end) {
        add_issue(report, IssueCode::offset_order, field,
                  "token " + std::to_string(i) + " starts before token " +
                      std::to_string(i - 1) + " ends");
      }
    }
  }
  return {usable};
}

Range outer(const TokenSpan& span) {
  Range r{span.offsets.front().start, span.offsets.front().end};
  for (const auto& o : span.offsets) {
    r.start = std::min(r.start, o.start);
    r.end = std::max(r.end, o.end);
  }
  return r;
}

}  // namespace

std::optional<Range> TokenSpan::extent() const {
  if (offsets.empty()) return std::nullopt;
  return Range{offsets.front().start, offsets.back().end};
}

std::string_view split_name(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::dev: return "dev";
    case Split::test: return "test";
    case Split::unassigned: return "unassigned";
  }
  return "unassigned";
}

std::string_view normalization_name(Normalization n) {
  return n == Normalization::none ? "none" : "nfc+collapse-whitespace";
}

Normalization parse_normalization(std::string_view name) {
  if (name == "none") return Normalization::none;
  if (name == "nfc+collapse-whitespace") return Normalization::nfc_collapse_whitespace;
  throw ConfigError("unknown normalization policy: " + std::string(name));
}

std::string_view issue_name(IssueCode code) {
  switch (code) {
    case IssueCode::offset_mismatch: return "OFFSET_MISMATCH";
    case IssueCode::empty_span: return "EMPTY_SPAN";
    case IssueCode::bad_label: return "BAD_LABEL";
    case IssueCode::bad_direction: return "BAD_DIRECTION";
    case IssueCode::directionless_causal: return "DIRECTIONLESS_CAUSAL";
    case IssueCode::span_interleave: return "SPAN_INTERLEAVE";
    case IssueCode::offset_out_of_range: return "OFFSET_OUT_OF_RANGE";
    case IssueCode::offset_count_mismatch: return "OFFSET_COUNT_MISMATCH";
    case IssueCode::offset_order: return "OFFSET_ORDER";
    case IssueCode::bad_split: return "BAD_SPLIT";
    case IssueCode::duplicate_id: return "DUPLICATE_ID";
  }
  return "UNKNOWN";
}

bool has_issue(const ValidationReport& report, IssueCode code) {
  return std::any_of(report.begin(), report.end(),
                     [code](const Issue& i) { return i.code == code; });
}

std::string describe(const ValidationReport& report) {
  std::string out;
  for (const auto& issue : report) {
    if (!out.empty()) out += "; ";
    out += std::string(issue_name(issue.code)) + " (" + issue.field + "): " + issue.detail;
  }
  return out;
}

ValidationReport validate_relation(const CrestRelation& rel, Normalization policy) {
  ValidationReport report;

  if (rel.label != kNonCausal && rel.label != kCausal) {
    add_issue(report, IssueCode::bad_label, "label",
              "label " + std::to_string(rel.label) + " not in {0,1}");
  }
  const bool direction_ok = rel.direction >= kNoDirection && rel.direction <= kSpan2CausesSpan1;
  if (!direction_ok) {
    add_issue(report, IssueCode::bad_direction, "direction",
              "direction " + std::to_string(rel.direction) + " not in {-1,0,1}");
  } else if (rel.label == kCausal && rel.direction == kNoDirection) {
    add_issue(report, IssueCode::directionless_causal, "direction",
              "causal relation without a direction");
  }
  if (rel.split < -1 || rel.split > 2) {
    add_issue(report, IssueCode::bad_split, "split",
              "split " + std::to_string(rel.split) + " not in {-1,0,1,2}");
  }

  const text::CodePoints cps(rel.context);
  const auto s1 = check_span(rel.span1, "span1", true, rel.context, cps, policy, report);
  const auto s2 = check_span(rel.span2, "span2", true, rel.context, cps, policy, report);
  check_span(rel.signal, "signal", false, rel.context, cps, policy, report);

  if (s1.usable && s2.usable) {
    const Range a = outer(rel.span1);
    const Range b = outer(rel.span2);
    const bool disjoint = a.end <= b.start || b.end <= a.start;
    if (!disjoint) {
      add_issue(report, IssueCode::span_interleave, "span2",
                "span1 extent [" + std::to_string(a.start) + "," + std::to_string(a.end) +
                    ") overlaps span2 extent [" + std::to_string(b.start) + "," +
                    std::to_string(b.end) + ")");
    }
  }
  return report;
}

std::vector<LedgerEntry> validate_corpus(const Corpus& corpus) {
  std::vector<LedgerEntry> ledger;
  std::set<std::pair<int, std::string>> seen;
  for (std::size_t i = 0; i < corpus.relations.size(); ++i) {
    const auto& rel = corpus.relations[i];
    for (const auto& issue : validate_relation(rel, corpus.normalization)) {
      ledger.push_back({i, issue.code});
    }
    if (!seen.emplace(rel.dataset_id, rel.original_id).second) {
      ledger.push_back({i, IssueCode::duplicate_id});
    }
  }
  return ledger;
}

TokenSpan span_from_range(const std::u32string& context, std::int64_t start,
                          std::int64_t end) {
  return span_from_ranges(context, {Range{start, end}});
}

TokenSpan span_from_ranges(const std::u32string& context, const std::vector<Range>& ranges) {
  TokenSpan span;
  for (const auto& r : ranges) {
    for (const auto& tok : text::whitespace_tokens(context, r.start, r.end)) {
      span.offsets.push_back(tok);
      span.tokens.push_back(text::to_utf8(
          std::u32string_view(context).substr(static_cast<std::size_t>(tok.start),
                                              static_cast<std::size_t>(tok.end - tok.start))));
    }
  }
  return span;
}

TokenSpan rebase(TokenSpan span, std::int64_t delta) {
  for (auto& r : span.offsets) {
    r.start -= delta;
    r.end -= delta;
  }
  return span;
}

CrestRelation normalize_relation(const CrestRelation& rel) {
  const std::u32string cps = text::to_u32(rel.context);
  const auto n = static_cast<std::int64_t>(cps.size());

  std::set<std::int64_t> cuts{0, n};
  for (const TokenSpan* span : {&rel.span1, &rel.span2, &rel.signal}) {
    for (const auto& r : span->offsets) {
      cuts.insert(std::clamp<std::int64_t>(r.start, 0, n));
      cuts.insert(std::clamp<std::int64_t>(r.end, 0, n));
    }
  }

  // NFC each segment between cut points so that offsets stay mappable, then
  // collapse whitespace in one pass while recording where each cut lands.
  std::u32string composed;
  std::vector<std::pair<std::int64_t, std::size_t>> cut_at;  // old cut -> index in composed
  for (auto it = cuts.begin(); it != cuts.end(); ++it) {
    cut_at.emplace_back(*it, composed.size());
    auto next = std::next(it);
    if (next == cuts.end()) break;
    const std::u32string_view seg =
        std::u32string_view(cps).substr(static_cast<std::size_t>(*it),
                                        static_cast<std::size_t>(*next - *it));
    composed += text::to_u32(text::nfc(text::to_utf8(seg)));
  }

  std::u32string out;
  std::map<std::int64_t, std::int64_t> remap;
  std::size_t next_cut = 0;
  bool pending = false;
  for (std::size_t i = 0; i <= composed.size(); ++i) {
    const bool at_end = i == composed.size();
    const bool space = !at_end && text::is_space(composed[i]);
    if (!at_end && !space && pending) {
      out.push_back(U' ');
      pending = false;
    }
    while (next_cut < cut_at.size() && cut_at[next_cut].second == i) {
      remap[cut_at[next_cut].first] = static_cast<std::int64_t>(out.size());
      ++next_cut;
    }
    if (at_end) break;
    if (space) {
      pending = !out.empty();
    } else {
      out.push_back(composed[i]);
    }
  }

  auto remap_span = [&](const TokenSpan& span) {
    TokenSpan result;
    for (const auto& r : span.offsets) {
      const auto s = remap[std::clamp<std::int64_t>(r.start, 0, n)];
      const auto e = remap[std::clamp<std::int64_t>(r.end, 0, n)];
      result.offsets.push_back({s, e});
      result.tokens.push_back(text::to_utf8(std::u32string_view(out).substr(
          static_cast<std::size_t>(s), static_cast<std::size_t>(std::max<std::int64_t>(e - s, 0)))));
    }
    return result;
  };

  CrestRelation normalized = rel;
  normalized.context = text::to_utf8(out);
  normalized.span1 = remap_span(rel.span1);
  normalized.span2 = remap_span(rel.span2);
  normalized.signal = remap_span(rel.signal);
  return normalized;
}

CrestRelation flip_direction(CrestRelation rel) {
  if (rel.direction == kSpan1CausesSpan2) {
    rel.direction = kSpan2CausesSpan1;
  } else if (rel.direction == kSpan2CausesSpan1) {
    rel.direction = kSpan1CausesSpan2;
  }
  return rel;
}

}  // namespace crest
