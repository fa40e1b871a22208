#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include <nlohmann/json.hpp>

#include "crest/adapters.hpp"
#include "crest/corpus_io.hpp"
#include "crest/error.hpp"

namespace crest::cli {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<std::string> source_extensions(std::string_view adapter) {
  if (adapter == "semeval2007" || adapter == "semeval2010") return {".txt", ".TXT"};
  if (adapter == "eventcausality" || adapter == "caters" || adapter == "because") return {".ann"};
  if (adapter == "causal-timebank") return {".tml", ".xml"};
  if (adapter == "eventstoryline" || adapter == "copa") return {".xml"};
  return {};  // pdtb3: anything but raw text
}

bool is_source(const fs::path& p, std::string_view adapter) {
  const auto exts = source_extensions(adapter);
  const std::string ext = p.extension().string();
  if (exts.empty()) return ext != ".txt";
  return std::find(exts.begin(), exts.end(), ext) != exts.end();
}

std::vector<fs::path> expand(const fs::path& input, std::string_view adapter) {
  if (fs::is_regular_file(input)) return {input};
  if (!fs::is_directory(input)) throw ConfigError("input not found: " + input.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(input)) {
    if (entry.is_regular_file() && is_source(entry.path(), adapter)) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

MarkerScheme parse_markers(const json& j) {
  MarkerScheme m;
  m.span1_open = j.value("span1_open", m.span1_open);
  m.span1_close = j.value("span1_close", m.span1_close);
  m.span2_open = j.value("span2_open", m.span2_open);
  m.span2_close = j.value("span2_close", m.span2_close);
  m.signal_open = j.value("signal_open", m.signal_open);
  m.signal_close = j.value("signal_close", m.signal_close);
  m.mark_signal = j.value("mark_signal", m.mark_signal);
  return m;
}

}  // namespace

OverlapPolicy parse_policy_flag(std::string_view flag, OverlapPolicy base) {
  const auto colon = flag.find(':');
  base.mode = parse_overlap_mode(flag.substr(0, colon));
  if (colon != std::string_view::npos) {
    const auto digits = flag.substr(colon + 1);
    std::size_t n = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || end != digits.data() + digits.size()) {
      throw ConfigError("bad --policy minimum: " + std::string(digits));
    }
    base.min_shared_chars = n;
  }
  base.check();
  return base;
}

PipelineConfig parse_config(std::string_view text, const fs::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  PipelineConfig cfg;
  try {
    auto resolve = [&](const std::string& p) {
      const fs::path path(p);
      return path.is_absolute() ? path : base_dir / path;
    };

    std::set<fs::path> seen;
    for (const auto& d : j.value("datasets", json::array())) {
      const std::string adapter = d.at("adapter").get<std::string>();
      const AdapterSpec& spec = adapter_by_name(adapter);
      const int id = d.value("dataset_id", spec.dataset_id);
      if (id != spec.dataset_id) {
        throw ConfigError("dataset_id " + std::to_string(id) + " does not match adapter " + adapter +
                          " (" + std::to_string(spec.dataset_id) + ")");
      }
      DatasetEntry entry{id, adapter, {}};
      for (const auto& in : d.at("inputs")) {
        const fs::path p = resolve(in.get<std::string>());
        for (auto& f : expand(p, adapter)) {
          if (!seen.insert(fs::weakly_canonical(f)).second) {
            throw ConfigError("input listed twice: " + f.string());
          }
          entry.inputs.push_back(std::move(f));
        }
      }
      cfg.datasets.push_back(std::move(entry));
    }

    if (j.contains("normalization")) {
      cfg.normalization = parse_normalization(j.at("normalization").get<std::string>());
    }
    if (j.contains("overlap_policy")) {
      const auto& p = j.at("overlap_policy");
      if (p.contains("normalization")) {
        cfg.overlap_policy.normalization =
            parse_context_normalization(p.at("normalization").get<std::string>());
      }
      if (p.contains("mode")) cfg.overlap_policy.mode = parse_overlap_mode(p.at("mode").get<std::string>());
      cfg.overlap_policy.min_shared_chars =
          p.value("min_shared_chars", cfg.overlap_policy.min_shared_chars);
    }
    if (j.contains("split")) {
      const auto& s = j.at("split");
      if (s.contains("ratios")) cfg.split.ratios = s.at("ratios").get<std::array<double, 3>>();
      if (s.contains("seed")) cfg.seed = s.at("seed").get<std::uint64_t>();
    }
    if (j.contains("markers")) cfg.markers = parse_markers(j.at("markers"));
    if (j.contains("task")) cfg.task = parse_task(j.at("task").get<std::string>());
    cfg.with_direction = j.value("with_direction", false);
    if (j.contains("output_dir")) cfg.output_dir = resolve(j.at("output_dir").get<std::string>());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  } catch (const DataError& e) {
    throw ConfigError(e.what());
  }

  cfg.overlap_policy.check();
  cfg.split.check();
  cfg.markers.check();
  if (cfg.seed) cfg.split.seed = *cfg.seed;
  return cfg;
}

PipelineConfig load_config(const fs::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw ConfigError("cannot read config " + path.string() + ": " + e.what());
  }
  return parse_config(text, path.parent_path());
}

}  // namespace crest::cli
