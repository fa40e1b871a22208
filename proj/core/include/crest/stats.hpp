#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "crest/adapters.hpp"
#include "crest/relation.hpp"

namespace crest {

struct DatasetStats {
  std::size_t causal = 0;
  std::size_t non_causal = 0;
  std::size_t signal_bearing = 0;
  std::size_t skipped = 0;
  std::array<std::size_t, 4> splits{};  // train, dev, test, unassigned

  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

struct CorpusStats {
  std::size_t total = 0;
  std::size_t causal = 0;
  std::size_t non_causal = 0;
  std::size_t signal_bearing = 0;
  std::size_t skipped = 0;
  std::array<std::size_t, 4> splits{};
  std::map<int, DatasetStats> datasets;
  // whitespace tokens in a span extent -> number of spans (span1 and span2)
  std::map<std::size_t, std::size_t> span_length_histogram;
  std::size_t inter_sentence = 0;
  std::size_t direction_forward = 0;   // causal, direction 0
  std::size_t direction_backward = 0;  // causal, direction 1

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

// Skip records, when given, add the raw (pre-filter) counts per dataset.
CorpusStats compute_stats(const Corpus& corpus, std::span<const SkipRecord> skips = {});

enum class ReportFormat { table_text, json };

ReportFormat parse_report_format(std::string_view name);
std::string render_report(const CorpusStats& stats, ReportFormat format);
CorpusStats stats_from_json(std::string_view json);

// 1234567 -> "1,234,567"
std::string with_thousands(std::size_t n);

}  // namespace crest
