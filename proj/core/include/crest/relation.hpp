#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crest/text.hpp"

namespace crest {

using text::Range;

// Tokens of one relation argument plus their character ranges in the context.
// Offsets count code points and are end-exclusive.
struct TokenSpan {
  std::vector<std::string> tokens;
  std::vector<Range> offsets;

  bool empty() const noexcept { return tokens.empty() && offsets.empty(); }

  // First token start to last token end; nullopt for an empty span.
  std::optional<Range> extent() const;

  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

inline constexpr int kNonCausal = 0;
inline constexpr int kCausal = 1;

// direction: 0 means span1 causes span2, 1 means span2 causes span1.
inline constexpr int kSpan1CausesSpan2 = 0;
inline constexpr int kSpan2CausesSpan1 = 1;
inline constexpr int kNoDirection = -1;

enum class Split : int { unassigned = -1, train = 0, dev = 1, test = 2 };

constexpr int to_int(Split s) noexcept { return static_cast<int>(s); }
std::string_view split_name(Split s);

// One causal or non-causal relation. label, direction and split are kept as
// raw integers so that arbitrary candidate records can be validated.
struct CrestRelation {
  std::string original_id;
  int dataset_id = 0;
  TokenSpan span1;
  TokenSpan span2;
  TokenSpan signal;
  std::string context;
  int label = kNonCausal;
  int direction = kNoDirection;
  int split = to_int(Split::unassigned);

  friend bool operator==(const CrestRelation&, const CrestRelation&) = default;
};

enum class Normalization { none, nfc_collapse_whitespace };

std::string_view normalization_name(Normalization n);
Normalization parse_normalization(std::string_view name);

enum class IssueCode {
  offset_mismatch,
  empty_span,
  bad_label,
  bad_direction,
  directionless_causal,
  span_interleave,
  offset_out_of_range,
  offset_count_mismatch,
  offset_order,
  bad_split,
  duplicate_id,
};

std::string_view issue_name(IssueCode code);

struct Issue {
  IssueCode code;
  std::string field;  // "span1", "label", ...
  std::string detail;

  friend bool operator==(const Issue&, const Issue&) = default;
};

using ValidationReport = std::vector<Issue>;

bool has_issue(const ValidationReport& report, IssueCode code);
std::string describe(const ValidationReport& report);

// Checks every CrestRelation invariant. Never throws on bad input.
ValidationReport validate_relation(const CrestRelation& rel,
                                   Normalization policy = Normalization::none);

struct LedgerEntry {
  std::size_t index;
  IssueCode code;

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

struct Corpus {
  std::vector<CrestRelation> relations;
  std::string source_name;
  Normalization normalization = Normalization::nfc_collapse_whitespace;
  std::vector<LedgerEntry> validation_ledger;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Validates every relation and the (dataset_id, original_id) uniqueness
// constraint; returns one ledger entry per issue found.
std::vector<LedgerEntry> validate_corpus(const Corpus& corpus);

// Builds a TokenSpan from whitespace tokens of context[start, end) (code
// points). Returns an empty span when the range holds no token.
TokenSpan span_from_range(const std::u32string& context, std::int64_t start,
                          std::int64_t end);
TokenSpan span_from_ranges(const std::u32string& context, const std::vector<Range>& ranges);

// Shifts all offsets of the span by -delta.
TokenSpan rebase(TokenSpan span, std::int64_t delta);

// Rewrites context to NFC with collapsed whitespace and remaps every offset.
// Tokens are re-sliced from the new context.
CrestRelation normalize_relation(const CrestRelation& rel);

// Swaps the causal direction (0 <-> 1); other values are left untouched.
CrestRelation flip_direction(CrestRelation rel);

}  // namespace crest
