#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "crest/relation.hpp"

namespace crest {

struct MarkerScheme {
  std::string span1_open = "[unused1]";
  std::string span1_close = "[unused2]";
  std::string span2_open = "[unused3]";
  std::string span2_close = "[unused4]";
  std::string signal_open = "[unused5]";
  std::string signal_close = "[unused6]";
  bool mark_signal = false;

  // All six markers non-empty and pairwise distinct; throws ConfigError.
  void check() const;
  std::array<std::string_view, 6> markers() const;
};

enum class Task { direction, pair };

std::string_view task_name(Task t);
Task parse_task(std::string_view name);

struct MarkedSequence {
  std::string text;
  int target = 0;
  Task task = Task::direction;
  std::string original_id;
  int dataset_id = 0;
  bool inter_sentence = false;

  friend bool operator==(const MarkedSequence&, const MarkedSequence&) = default;
};

// Direction task: target = direction, only causal relations accepted.
// Pair task: target = label.
int task_target(const CrestRelation& rel, Task task);

// Wraps span extents with markers. Without direction the span1 markers always
// go around span1, so the text does not depend on which side is the cause.
// With direction the cause-side span gets the span1 markers. Markers are
// separated from the text by a single space. Throws DataError on a causal
// requirement violation, marker collision, or spans that cannot be nested.
MarkedSequence to_sequence(const CrestRelation& rel, const MarkerScheme& scheme,
                           bool with_direction, Task task = Task::direction);

// Removes markers together with the single space inserted next to each.
std::string strip_markers(std::string_view text, const MarkerScheme& scheme);

// True when a sentence boundary lies strictly between the two span extents.
bool is_inter_sentence(const CrestRelation& rel);

std::string sequence_to_json(const MarkedSequence& seq);

struct EmitSummary {
  std::array<std::size_t, 3> counts{};  // train, dev, test lines
  std::size_t filtered_out = 0;         // non-causal relations dropped by the direction task
  std::vector<std::string> warnings;
};

// Writes train.jsonl, dev.jsonl and test.jsonl into out_dir in corpus order.
// Throws DataError (UNASSIGNED_SPLIT) if any relation has split -1.
EmitSummary emit_task_dataset(const Corpus& corpus, Task task, const MarkerScheme& scheme,
                              bool with_direction, const std::filesystem::path& out_dir);

}  // namespace crest
