#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"
#include "crest/adapters.hpp"
#include "crest/relation.hpp"
#include "crest/sequence.hpp"
#include "crest/splitter.hpp"

namespace crest::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kDataError = 2;

struct Converted {
  Corpus corpus;
  std::vector<SkipRecord> skips;
  std::size_t candidates = 0;

  std::size_t malformed() const;
};

// Runs every configured adapter, datasets ordered by dataset_id.
Converted convert(const PipelineConfig& config);
void write_converted(const Converted& c, const std::filesystem::path& out_dir);

SplitResult split(const Corpus& corpus, const OverlapPolicy& policy, const SplitConfig& config);

std::vector<SkipRecord> read_skips(const std::filesystem::path& path);

// Parses argv (without the program name) and runs one subcommand. Never
// throws; failures print a one-line JSON error to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crest::cli
