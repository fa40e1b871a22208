#include "crest/sequence.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <tuple>

#include "crest/corpus_io.hpp"
#include "crest/error.hpp"

namespace crest {
namespace {

struct Bracket {
  Range range;
  std::string_view open;
  std::string_view close;
};

struct Insertion {
  std::int64_t position;
  int kind;                 // 0 = close, 1 = open
  std::int64_t nest_key;    // orders markers that share a position
  std::u32string marker;
};

bool crosses(const Range& a, const Range& b) {
  const bool disjoint = a.end <= b.start || b.end <= a.start;
  const bool a_in_b = b.start <= a.start && a.end <= b.end;
  const bool b_in_a = a.start <= b.start && b.end <= a.end;
  return !(disjoint || a_in_b || b_in_a);
}

void erase_all(std::string& s, std::string_view pattern) {
  if (pattern.empty()) return;
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = s.find(pattern, pos);
    if (hit == std::string::npos) break;
    out.append(s, pos, hit - pos);
    pos = hit + pattern.size();
  }
  out.append(s, pos, std::string::npos);
  s = std::move(out);
}

}  // namespace

void MarkerScheme::check() const {
  const auto all = markers();
  std::set<std::string_view> distinct;
  for (auto m : all) {
    if (m.empty()) throw ConfigError("marker strings must be non-empty");
    if (m.find(' ') != std::string_view::npos) throw ConfigError("marker strings must not contain spaces");
    distinct.insert(m);
  }
  if (distinct.size() != all.size()) throw ConfigError("marker strings must be distinct");
}

std::array<std::string_view, 6> MarkerScheme::markers() const {
  return {span1_open, span1_close, span2_open, span2_close, signal_open, signal_close};
}

std::string_view task_name(Task t) { return t == Task::direction ? "direction" : "pair"; }

Task parse_task(std::string_view name) {
  if (name == "direction") return Task::direction;
  if (name == "pair") return Task::pair;
  throw ConfigError("unknown task: " + std::string(name));
}

int task_target(const CrestRelation& rel, Task task) {
  if (task == Task::pair) return rel.label;
  if (rel.label != kCausal || (rel.direction != kSpan1CausesSpan2 && rel.direction != kSpan2CausesSpan1)) {
    throw DataError("NOT_CAUSAL", "direction task needs a causal relation with a direction (" +
                                      rel.original_id + ")");
  }
  return rel.direction;
}

bool is_inter_sentence(const CrestRelation& rel) {
  const auto a = rel.span1.extent();
  const auto b = rel.span2.extent();
  if (!a || !b) return false;
  const Range first = a->start <= b->start ? *a : *b;
  const Range second = a->start <= b->start ? *b : *a;
  if (second.start <= first.end) return false;
  return text::sentence_boundary_within(text::to_u32(rel.context), first.end, second.start);
}

MarkedSequence to_sequence(const CrestRelation& rel, const MarkerScheme& scheme,
                           bool with_direction, Task task) {
  scheme.check();
  const auto report = validate_relation(rel);
  if (!report.empty()) {
    throw DataError("INVALID_RELATION", rel.original_id + ": " + describe(report));
  }

  MarkedSequence seq;
  seq.task = task;
  seq.target = task_target(rel, task);
  seq.original_id = rel.original_id;
  seq.dataset_id = rel.dataset_id;
  seq.inter_sentence = is_inter_sentence(rel);

  for (auto m : scheme.markers()) {
    if (rel.context.find(m) != std::string::npos) {
      throw DataError("MARKER_COLLISION", "marker \"" + std::string(m) +
                                              "\" occurs in the context of " + rel.original_id);
    }
  }

  const Range ext1 = *rel.span1.extent();
  const Range ext2 = *rel.span2.extent();
  std::vector<Bracket> brackets;
  const bool role_bound = with_direction && rel.direction != kNoDirection;
  if (role_bound && rel.direction == kSpan2CausesSpan1) {
    brackets.push_back({ext2, scheme.span1_open, scheme.span1_close});
    brackets.push_back({ext1, scheme.span2_open, scheme.span2_close});
  } else {
    brackets.push_back({ext1, scheme.span1_open, scheme.span1_close});
    brackets.push_back({ext2, scheme.span2_open, scheme.span2_close});
  }
  if (scheme.mark_signal && !rel.signal.empty()) {
    const Range sig = *rel.signal.extent();
    if (crosses(sig, ext1) || crosses(sig, ext2)) {
      throw DataError("MARKER_CROSSING",
                      "signal extent crosses a span extent in " + rel.original_id);
    }
    brackets.push_back({sig, scheme.signal_open, scheme.signal_close});
  }

  std::vector<Insertion> inserts;
  for (const auto& b : brackets) {
    // Opens: the outer (later-ending) bracket first. Closes: the inner
    // (later-starting) bracket first.
    inserts.push_back({b.range.start, 1, -b.range.end, text::to_u32(b.open) + U" "});
    inserts.push_back({b.range.end, 0, -b.range.start, U" " + text::to_u32(b.close)});
  }
  std::stable_sort(inserts.begin(), inserts.end(), [](const Insertion& x, const Insertion& y) {
    return std::tie(x.position, x.kind, x.nest_key) < std::tie(y.position, y.kind, y.nest_key);
  });

  const std::u32string cps = text::to_u32(rel.context);
  std::u32string out;
  out.reserve(cps.size() + 64);
  std::size_t next = 0;
  for (std::int64_t i = 0; i <= static_cast<std::int64_t>(cps.size()); ++i) {
    while (next < inserts.size() && inserts[next].position == i) {
      out += inserts[next].marker;
      ++next;
    }
    if (i < static_cast<std::int64_t>(cps.size())) out.push_back(cps[static_cast<std::size_t>(i)]);
  }
  seq.text = text::to_utf8(out);
  return seq;
}

std::string strip_markers(std::string_view text, const MarkerScheme& scheme) {
  std::string s(text);
  for (const std::string* open : {&scheme.span1_open, &scheme.span2_open, &scheme.signal_open}) {
    erase_all(s, *open + " ");
  }
  for (const std::string* close : {&scheme.span1_close, &scheme.span2_close, &scheme.signal_close}) {
    erase_all(s, " " + *close);
  }
  return s;
}

std::string sequence_to_json(const MarkedSequence& seq) {
  nlohmann::ordered_json j;
  j["text"] = seq.text;
  j["target"] = seq.target;
  j["original_id"] = seq.original_id;
  j["dataset_id"] = seq.dataset_id;
  j["inter_sentence"] = seq.inter_sentence;
  return j.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::strict);
}

EmitSummary emit_task_dataset(const Corpus& corpus, Task task, const MarkerScheme& scheme,
                              bool with_direction, const std::filesystem::path& out_dir) {
  scheme.check();
  for (const auto& rel : corpus.relations) {
    if (rel.split < 0 || rel.split > 2) {
      throw DataError("UNASSIGNED_SPLIT",
                      "relation " + rel.original_id + " has no split assigned; run split first");
    }
  }

  EmitSummary summary;
  std::array<std::ostringstream, 3> files;
  for (const auto& rel : corpus.relations) {
    if (task == Task::direction && rel.label != kCausal) {
      ++summary.filtered_out;
      continue;
    }
    const auto seq = to_sequence(rel, scheme, with_direction, task);
    const auto s = static_cast<std::size_t>(rel.split);
    files[s] << sequence_to_json(seq) << '\n';
    ++summary.counts[s];
  }
  for (std::size_t s = 0; s < 3; ++s) {
    write_file(out_dir / (std::string(split_name(static_cast<Split>(s))) + ".jsonl"), files[s].str());
  }
  if (summary.counts[0] + summary.counts[1] + summary.counts[2] == 0) {
    summary.warnings.push_back(std::string("no relations qualified for the ") +
                               std::string(task_name(task)) + " task; wrote empty files");
  }
  return summary;
}

}  // namespace crest
