#pragma once

// The flooded-river relation used throughout the tests, and single-field
// mutations of it paired with the one issue each must raise.

#include <string>
#include <vector>

#include "crest/relation.hpp"

namespace flood_case {

using crest::CrestRelation;
using crest::IssueCode;

inline const std::string kFlood =
    "The river had now turned into full flood after the deluge of rain a few days ago.";

inline CrestRelation flood() {
  CrestRelation rel;
  rel.original_id = "flood-1";
  rel.dataset_id = 1;
  rel.context = kFlood;
  rel.span1 = {{"flood"}, {{35, 40}}};
  rel.span2 = {{"deluge", "of", "rain"}, {{51, 57}, {58, 60}, {61, 65}}};
  rel.label = 1;
  rel.direction = 1;
  return rel;
}

struct Mutation {
  const char* name;
  void (*apply)(CrestRelation&);
  IssueCode expected;
};

inline const std::vector<Mutation>& mutations() {
  static const std::vector<Mutation> all = {
    {"span1_short_by_one", [](CrestRelation& r) { r.span1.offsets[0] = {35, 39}; }, IssueCode::offset_mismatch},
    {"span1_token_case", [](CrestRelation& r) { r.span1.tokens[0] = "Flood"; }, IssueCode::offset_mismatch},
    {"signal_misaligned", [](CrestRelation& r) { r.signal = {{"after"}, {{40, 45}}}; }, IssueCode::offset_mismatch},
    {"label_two", [](CrestRelation& r) { r.label = 2; }, IssueCode::bad_label},
    {"label_negative", [](CrestRelation& r) { r.label = -1; }, IssueCode::bad_label},
    {"direction_two", [](CrestRelation& r) { r.direction = 2; }, IssueCode::bad_direction},
    {"direction_minus_two", [](CrestRelation& r) { r.direction = -2; }, IssueCode::bad_direction},
    {"causal_without_direction", [](CrestRelation& r) { r.direction = -1; }, IssueCode::directionless_causal},
    {"span1_empty", [](CrestRelation& r) { r.span1 = {}; }, IssueCode::empty_span},
    {"span2_empty", [](CrestRelation& r) { r.span2 = {}; }, IssueCode::empty_span},
    {"span1_past_end", [](CrestRelation& r) { r.span1.offsets[0] = {35, 200}; }, IssueCode::offset_out_of_range},
    {"span1_negative_start", [](CrestRelation& r) { r.span1.offsets[0] = {-1, 4}; }, IssueCode::offset_out_of_range},
    {"span1_zero_width", [](CrestRelation& r) { r.span1.offsets[0] = {35, 35}; }, IssueCode::offset_out_of_range},
    {"spans_partially_interleave",
     [](CrestRelation& r) {
       r.span1 = {{"full", "flood"}, {{30, 34}, {35, 40}}};
       r.span2 = {{"flood", "after"}, {{35, 40}, {41, 46}}};
     },
     IssueCode::span_interleave},
    {"span2_nested_in_span1",
     [](CrestRelation& r) {
       r.span1 = {{"flood", "after", "the"}, {{35, 40}, {41, 46}, {47, 50}}};
       r.span2 = {{"after"}, {{41, 46}}};
     },
     IssueCode::span_interleave},
    {"split_three", [](CrestRelation& r) { r.split = 3; }, IssueCode::bad_split},
    {"split_minus_two", [](CrestRelation& r) { r.split = -2; }, IssueCode::bad_split},
    {"span2_missing_offset", [](CrestRelation& r) { r.span2.offsets.pop_back(); }, IssueCode::offset_count_mismatch},
    {"span2_tokens_out_of_order",
     [](CrestRelation& r) { r.span2 = {{"of", "deluge", "rain"}, {{58, 60}, {51, 57}, {61, 65}}}; },
     IssueCode::offset_order},
};
  return all;
}

}  // namespace flood_case
