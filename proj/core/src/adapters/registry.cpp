#include <algorithm>
#include <filesystem>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "adapters/common.hpp"
#include "adapters/standoff.hpp"
#include "crest/adapters.hpp"
#include "crest/corpus_io.hpp"
#include "crest/error.hpp"

namespace crest {
namespace fs = std::filesystem;

namespace {

constexpr std::string_view kSkipNames[] = {"EXCLUDED_SENSE", "EXCLUDED_RELATION_TYPE", "MALFORMED",
                                           "MISSING_TEXT"};

bool blank(std::string_view s) { return detail::trim(s).empty(); }

std::string doc_id_of(const fs::path& p) { return p.stem().string(); }

// Standoff annotation with its sibling .txt. Without the text nothing can be
// aligned, so every candidate is skipped.
using StandoffParser = ParseResult (*)(std::string_view, std::string_view, std::string_view);

ParseResult parse_standoff_file(const fs::path& ann_path, StandoffParser parser, bool events) {
  const std::string ann = read_file(ann_path);
  const std::string doc = doc_id_of(ann_path);
  fs::path txt_path = ann_path;
  txt_path.replace_extension(".txt");
  if (fs::exists(txt_path)) return parser(ann, read_file(txt_path), doc);

  ParseResult result;
  const auto parsed = standoff::parse(ann);
  auto miss = [&](const std::string& local) {
    ++result.candidates;
    result.skips.push_back(detail::skip(detail::make_id(doc, local), SkipReason::missing_text,
                                        "no " + txt_path.filename().string()));
  };
  if (events) {
    for (const auto& e : parsed.events) miss(e.id);
  } else {
    for (const auto& r : parsed.relations) miss(r.id);
  }
  return result;
}

// Raw text for a PDTB3 gold file: same stem with .txt, then path + ".txt",
// then the same relative location under a sibling "raw" directory.
std::optional<fs::path> pdtb_raw_path(const fs::path& gold) {
  std::vector<fs::path> candidates;
  fs::path same = gold;
  same.replace_extension(".txt");
  if (same != gold) candidates.push_back(same);
  candidates.push_back(fs::path(gold.string() + ".txt"));
  fs::path swapped;
  bool hit = false;
  for (const auto& part : gold) {
    if (!hit && part == "gold") {
      swapped /= "raw";
      hit = true;
    } else {
      swapped /= part;
    }
  }
  if (hit) candidates.push_back(swapped);
  for (const auto& c : candidates) {
    if (fs::is_regular_file(c)) return c;
  }
  return std::nullopt;
}

ParseResult parse_pdtb_file(const fs::path& gold) {
  const std::string records = read_file(gold);
  const std::string doc = doc_id_of(gold);
  if (auto raw = pdtb_raw_path(gold)) return parse_pdtb3(records, read_file(*raw), doc);
  return skip_missing_text(records, doc, "raw text not found for " + gold.filename().string());
}

template <typename F>
std::function<ParseResult(const fs::path&)> whole_file(F parser) {
  return [parser](const fs::path& p) {
    const std::string content = read_file(p);
    if (blank(content)) return ParseResult{};
    return parser(content, doc_id_of(p));
  };
}

std::vector<AdapterSpec> make_registry() {
  std::vector<AdapterSpec> r;
  r.push_back({dataset::semeval2007, "semeval2007", "SemEval-2007", false,
               whole_file([](std::string_view c, std::string_view d) {
                 return parse_semeval(c, d, SemEvalTask::y2007);
               })});
  r.push_back({dataset::semeval2010, "semeval2010", "SemEval-2010", false,
               whole_file([](std::string_view c, std::string_view d) {
                 return parse_semeval(c, d, SemEvalTask::y2010);
               })});
  r.push_back({dataset::event_causality, "eventcausality", "EventCausality", false,
               [](const fs::path& p) { return parse_standoff_file(p, &parse_eventcausality, false); }});
  r.push_back({dataset::causal_timebank, "causal-timebank", "Causal-TimeBank", true,
               whole_file(&parse_causal_timebank)});
  r.push_back({dataset::event_storyline, "eventstoryline", "ESL", true,
               whole_file(&parse_eventstoryline)});
  r.push_back({dataset::caters, "caters", "CaTeRS", false,
               [](const fs::path& p) { return parse_standoff_file(p, &parse_caters, false); }});
  r.push_back({dataset::because, "because", "BECauSE", true,
               [](const fs::path& p) { return parse_standoff_file(p, &parse_because, true); }});
  r.push_back({dataset::copa, "copa", "COPA", false, whole_file(&parse_copa)});
  r.push_back({dataset::pdtb3, "pdtb3", "PDTB3", true, &parse_pdtb_file});
  return r;
}

}  // namespace

std::string_view skip_reason_name(SkipReason r) { return kSkipNames[static_cast<int>(r)]; }

SkipReason parse_skip_reason(std::string_view name) {
  for (int i = 0; i < 4; ++i) {
    if (kSkipNames[i] == name) return static_cast<SkipReason>(i);
  }
  throw DataError("MALFORMED_RECORD", "unknown skip reason \"" + std::string(name) + "\"");
}

void ParseResult::append(ParseResult other) {
  relations.insert(relations.end(), std::make_move_iterator(other.relations.begin()),
                   std::make_move_iterator(other.relations.end()));
  skips.insert(skips.end(), std::make_move_iterator(other.skips.begin()),
               std::make_move_iterator(other.skips.end()));
  candidates += other.candidates;
}

const std::vector<AdapterSpec>& adapter_registry() {
  static const std::vector<AdapterSpec> registry = make_registry();
  return registry;
}

const AdapterSpec& adapter_by_id(int dataset_id) {
  for (const auto& a : adapter_registry()) {
    if (a.dataset_id == dataset_id) return a;
  }
  throw ConfigError("unknown dataset_id " + std::to_string(dataset_id));
}

const AdapterSpec& adapter_by_name(std::string_view name) {
  for (const auto& a : adapter_registry()) {
    if (a.name == name) return a;
  }
  throw ConfigError("unknown adapter \"" + std::string(name) + "\"");
}

std::string dataset_display_name(int dataset_id) {
  for (const auto& a : adapter_registry()) {
    if (a.dataset_id == dataset_id) return a.display_name;
  }
  return "dataset-" + std::to_string(dataset_id);
}

ParseResult parse_with_adapter(const AdapterSpec& adapter, std::vector<fs::path> files,
                               Normalization normalization, int declared_split) {
  if (declared_split < -1 || declared_split > 2) {
    throw ConfigError("declared split must be -1, 0, 1 or 2");
  }
  std::sort(files.begin(), files.end());
  ParseResult out;
  for (const auto& file : files) {
    ParseResult raw = adapter.parse_file(file);
    if (raw.relations.size() + raw.skips.size() != raw.candidates) {
      throw std::logic_error(adapter.name + " lost candidates in " + file.string());
    }
    out.candidates += raw.candidates;
    for (auto& skip : raw.skips) {
      skip.dataset_id = adapter.dataset_id;
      out.skips.push_back(std::move(skip));
    }
    for (auto& rel : raw.relations) {
      rel.dataset_id = adapter.dataset_id;
      rel.split = declared_split;
      if (!adapter.has_signal && !rel.signal.empty()) {
        throw std::logic_error(adapter.name + " emitted a signal for " + rel.original_id);
      }
      if (normalization == Normalization::nfc_collapse_whitespace) rel = normalize_relation(rel);
      const auto report = validate_relation(rel, normalization);
      if (!report.empty()) {
        SkipRecord s = detail::skip(rel.original_id, SkipReason::malformed, describe(report));
        s.dataset_id = adapter.dataset_id;
        out.skips.push_back(std::move(s));
        continue;
      }
      out.relations.push_back(std::move(rel));
    }
  }
  return out;
}

std::string skip_to_json(const SkipRecord& skip) {
  nlohmann::ordered_json j;
  j["original_id"] = skip.original_id;
  j["dataset_id"] = skip.dataset_id;
  j["reason"] = skip_reason_name(skip.reason);
  j["detail"] = skip.detail;
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
}

SkipRecord skip_from_json(std::string_view line) {
  try {
    const auto j = nlohmann::json::parse(line);
    SkipRecord s;
    s.original_id = j.at("original_id").get<std::string>();
    s.dataset_id = j.value("dataset_id", 0);
    s.reason = parse_skip_reason(j.at("reason").get<std::string>());
    s.detail = j.value("detail", std::string{});
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("MALFORMED_RECORD", std::string("bad skip record: ") + e.what());
  }
}

}  // namespace crest
