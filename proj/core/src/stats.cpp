#include "crest/stats.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "crest/error.hpp"
#include "crest/sequence.hpp"

namespace crest {
namespace {

using ojson = nlohmann::ordered_json;

std::size_t split_slot(int split) { return split >= 0 && split <= 2 ? static_cast<std::size_t>(split) : 3; }

std::size_t extent_tokens(const std::u32string& context, const TokenSpan& span) {
  const auto ext = span.extent();
  if (!ext) return 0;
  return text::whitespace_tokens(context, ext->start, ext->end).size();
}

ojson splits_json(const std::array<std::size_t, 4>& s) {
  return ojson{{"train", s[0]}, {"dev", s[1]}, {"test", s[2]}, {"unassigned", s[3]}};
}

std::array<std::size_t, 4> splits_from(const ojson& j) {
  return {j.at("train").get<std::size_t>(), j.at("dev").get<std::size_t>(),
          j.at("test").get<std::size_t>(), j.at("unassigned").get<std::size_t>()};
}

}  // namespace

std::string with_thousands(std::size_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (digits.size() - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

CorpusStats compute_stats(const Corpus& corpus, std::span<const SkipRecord> skips) {
  CorpusStats stats;
  for (const auto& rel : corpus.relations) {
    auto& ds = stats.datasets[rel.dataset_id];
    ++stats.total;
    if (rel.label == kCausal) {
      ++stats.causal;
      ++ds.causal;
      if (rel.direction == kSpan1CausesSpan2) ++stats.direction_forward;
      if (rel.direction == kSpan2CausesSpan1) ++stats.direction_backward;
    } else {
      ++stats.non_causal;
      ++ds.non_causal;
    }
    if (!rel.signal.empty()) {
      ++stats.signal_bearing;
      ++ds.signal_bearing;
    }
    const std::size_t slot = split_slot(rel.split);
    ++stats.splits[slot];
    ++ds.splits[slot];

    const std::u32string cps = text::to_u32(rel.context);
    ++stats.span_length_histogram[extent_tokens(cps, rel.span1)];
    ++stats.span_length_histogram[extent_tokens(cps, rel.span2)];
    if (is_inter_sentence(rel)) ++stats.inter_sentence;
  }
  for (const auto& skip : skips) {
    ++stats.skipped;
    ++stats.datasets[skip.dataset_id].skipped;
  }
  return stats;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "table-text" || name == "text") return ReportFormat::table_text;
  if (name == "json") return ReportFormat::json;
  throw ConfigError("unknown report format: " + std::string(name));
}

std::string render_report(const CorpusStats& stats, ReportFormat format) {
  if (format == ReportFormat::json) {
    ojson j;
    j["total"] = stats.total;
    j["causal"] = stats.causal;
    j["non_causal"] = stats.non_causal;
    j["signal_bearing"] = stats.signal_bearing;
    j["skipped"] = stats.skipped;
    j["splits"] = splits_json(stats.splits);
    ojson datasets = ojson::array();
    for (const auto& [id, ds] : stats.datasets) {
      datasets.push_back(ojson{{"dataset_id", id},
                               {"name", dataset_display_name(id)},
                               {"causal", ds.causal},
                               {"non_causal", ds.non_causal},
                               {"signal_bearing", ds.signal_bearing},
                               {"skipped", ds.skipped},
                               {"splits", splits_json(ds.splits)}});
    }
    j["datasets"] = datasets;
    ojson hist = ojson::array();
    for (const auto& [len, count] : stats.span_length_histogram) hist.push_back({len, count});
    j["span_length_histogram"] = hist;
    j["inter_sentence"] = stats.inter_sentence;
    j["direction_balance"] = {{"0", stats.direction_forward}, {"1", stats.direction_backward}};
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "Datasets\n";
  out << "ID Dataset Causal Non-causal Signal Skipped Raw\n";
  for (const auto& [id, ds] : stats.datasets) {
    out << id << ' ' << dataset_display_name(id) << ' ' << with_thousands(ds.causal) << ' '
        << with_thousands(ds.non_causal) << ' ' << with_thousands(ds.signal_bearing) << ' '
        << with_thousands(ds.skipped) << ' '
        << with_thousands(ds.causal + ds.non_causal + ds.skipped) << '\n';
  }
  out << "\nSplits\n";
  // the unassigned column only appears when something is unassigned
  const bool unassigned = stats.splits[3] != 0;
  out << "Source Train Dev Test" << (unassigned ? " Unassigned\n" : "\n");
  for (const auto& [id, ds] : stats.datasets) {
    out << dataset_display_name(id) << ' ' << with_thousands(ds.splits[0]) << ' '
        << with_thousands(ds.splits[1]) << ' ' << with_thousands(ds.splits[2]);
    if (unassigned) out << ' ' << with_thousands(ds.splits[3]);
    out << '\n';
  }
  out << "\nTotal " << with_thousands(stats.total) << " relations: "
      << with_thousands(stats.causal) << " causal, " << with_thousands(stats.non_causal)
      << " non-causal, " << with_thousands(stats.signal_bearing) << " with signal, "
      << with_thousands(stats.skipped) << " skipped\n";
  out << "Direction balance (causal): 0=" << with_thousands(stats.direction_forward)
      << " 1=" << with_thousands(stats.direction_backward) << '\n';
  out << "Inter-sentence relations: " << with_thousands(stats.inter_sentence) << '\n';
  out << "Span length (tokens: spans):";
  for (const auto& [len, count] : stats.span_length_histogram) {
    out << ' ' << len << ':' << count;
  }
  out << '\n';
  return out.str();
}

CorpusStats stats_from_json(std::string_view json) {
  CorpusStats stats;
  try {
    const ojson j = ojson::parse(json);
    stats.total = j.at("total").get<std::size_t>();
    stats.causal = j.at("causal").get<std::size_t>();
    stats.non_causal = j.at("non_causal").get<std::size_t>();
    stats.signal_bearing = j.at("signal_bearing").get<std::size_t>();
    stats.skipped = j.at("skipped").get<std::size_t>();
    stats.splits = splits_from(j.at("splits"));
    for (const auto& d : j.at("datasets")) {
      DatasetStats ds;
      ds.causal = d.at("causal").get<std::size_t>();
      ds.non_causal = d.at("non_causal").get<std::size_t>();
      ds.signal_bearing = d.at("signal_bearing").get<std::size_t>();
      ds.skipped = d.at("skipped").get<std::size_t>();
      ds.splits = splits_from(d.at("splits"));
      stats.datasets[d.at("dataset_id").get<int>()] = ds;
    }
    for (const auto& pair : j.at("span_length_histogram")) {
      stats.span_length_histogram[pair.at(0).get<std::size_t>()] = pair.at(1).get<std::size_t>();
    }
    stats.inter_sentence = j.at("inter_sentence").get<std::size_t>();
    stats.direction_forward = j.at("direction_balance").at("0").get<std::size_t>();
    stats.direction_backward = j.at("direction_balance").at("1").get<std::size_t>();
  } catch (const ojson::exception& e) {
    throw DataError("MALFORMED_REPORT", std::string("bad stats JSON: ") + e.what());
  }
  return stats;
}

}  // namespace crest
