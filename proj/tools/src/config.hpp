#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "crest/relation.hpp"
#include "crest/sequence.hpp"
#include "crest/splitter.hpp"

namespace crest::cli {

struct DatasetEntry {
  int dataset_id;
  std::string adapter;
  std::vector<std::filesystem::path> inputs;  // files, after directory expansion
};

struct PipelineConfig {
  std::vector<DatasetEntry> datasets;
  Normalization normalization = Normalization::nfc_collapse_whitespace;
  OverlapPolicy overlap_policy;
  SplitConfig split;
  std::optional<std::uint64_t> seed;  // split.seed is only meaningful when set
  MarkerScheme markers;
  Task task = Task::direction;
  bool with_direction = false;
  std::filesystem::path output_dir = "crest-out";
};

// Reads and checks the whole config before anything runs. Relative paths are
// resolved against the config file's directory; directory inputs expand to the
// adapter's source files in sorted order. Throws ConfigError.
PipelineConfig load_config(const std::filesystem::path& path);
PipelineConfig parse_config(std::string_view json, const std::filesystem::path& base_dir);

// "containment", "equality", "shared-substring" or "shared-substring:<n>".
OverlapPolicy parse_policy_flag(std::string_view flag, OverlapPolicy base);

}  // namespace crest::cli
