#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "crest/corpus_io.hpp"
#include "crest/error.hpp"
#include "crest/stats.hpp"

namespace crest::cli {
namespace fs = std::filesystem;

namespace {

void setup_logging() {
  static bool done = false;
  if (done) return;
  done = true;
  auto logger = spdlog::stderr_color_mt("crest-forge");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("CREST_FORGE_LOG")) {
    spdlog::set_level(spdlog::level::from_str(env));
  }
}

void print_error(std::ostream& err, std::string_view code, std::string_view message,
                 std::optional<std::size_t> line = std::nullopt) {
  nlohmann::ordered_json j;
  j["error"] = code;
  j["message"] = message;
  if (line) j["line"] = *line;
  err << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
}

Corpus load(const fs::path& input, Normalization normalization) {
  ReadOptions options;
  options.normalization = normalization;
  return read_corpus(input, options);
}

void write_sequences(const Corpus& corpus, Task task, const MarkerScheme& markers,
                     bool with_direction, const fs::path& dir, std::ostream& out) {
  const auto summary = emit_task_dataset(corpus, task, markers, with_direction, dir);
  for (const auto& w : summary.warnings) spdlog::warn("{}", w);
  out << "sequences (" << task_name(task) << "): train " << summary.counts[0] << ", dev "
      << summary.counts[1] << ", test " << summary.counts[2];
  if (summary.filtered_out > 0) out << " (" << summary.filtered_out << " non-causal skipped)";
  out << '\n';
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& flag, const PipelineConfig* cfg) {
  if (flag) return *flag;
  if (cfg != nullptr && cfg->seed) return *cfg->seed;
  throw ConfigError("a split seed is required (--seed or split.seed in the config)");
}

}  // namespace

std::size_t Converted::malformed() const {
  return static_cast<std::size_t>(std::count_if(skips.begin(), skips.end(), [](const SkipRecord& s) {
    return s.reason == SkipReason::malformed;
  }));
}

Converted convert(const PipelineConfig& config) {
  std::vector<const DatasetEntry*> order;
  for (const auto& d : config.datasets) order.push_back(&d);
  std::stable_sort(order.begin(), order.end(), [](const DatasetEntry* a, const DatasetEntry* b) {
    return a->dataset_id < b->dataset_id;
  });

  Converted c;
  c.corpus.source_name = "crest";
  c.corpus.normalization = config.normalization;
  for (const auto* d : order) {
    const auto& spec = adapter_by_name(d->adapter);
    auto result = parse_with_adapter(spec, d->inputs, config.normalization);
    spdlog::info("{}: {} files, {} candidates, {} relations, {} skipped", spec.display_name,
                 d->inputs.size(), result.candidates, result.relations.size(), result.skips.size());
    c.candidates += result.candidates;
    for (auto& r : result.relations) c.corpus.relations.push_back(std::move(r));
    for (auto& s : result.skips) c.skips.push_back(std::move(s));
  }
  for (const auto& entry : validate_corpus(c.corpus)) {
    const auto& rel = c.corpus.relations[entry.index];
    throw DataError(std::string(issue_name(entry.code)),
                    "converted relation " + rel.original_id + " (dataset " +
                        std::to_string(rel.dataset_id) + ") is invalid");
  }
  return c;
}

void write_converted(const Converted& c, const fs::path& out_dir) {
  write_corpus(c.corpus, out_dir / "crest.jsonl");
  std::string skips;
  for (const auto& s : c.skips) skips += skip_to_json(s) + '\n';
  write_file(out_dir / "skips.jsonl", skips);
}

SplitResult split(const Corpus& corpus, const OverlapPolicy& policy, const SplitConfig& config) {
  const auto partition = build_overlap_partition(corpus, policy);
  spdlog::info("{} overlap groups, largest {}", partition.groups.size(), partition.max_group_size());
  return assign_splits(corpus, partition, config);
}

std::vector<SkipRecord> read_skips(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("IO_ERROR", "cannot open " + path.string());
  std::vector<SkipRecord> skips;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      skips.push_back(skip_from_json(line));
    } catch (const DataError& e) {
      throw LineError(e.code(), n, e.what());
    }
  }
  return skips;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  setup_logging();

  CLI::App app{"Convert causal-relation datasets to CREST JSONL, split them without context "
               "leakage, and emit marker sequences.",
               "crest-forge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "crest-forge 0.1.0");

  std::string config_path;
  std::string out_path;
  std::string input;
  std::string policy_flag;
  std::optional<std::uint64_t> seed;
  std::string task_flag;
  bool with_direction = false;
  bool strict = false;
  std::string skips_path;
  std::string format = "table-text";

  auto* convert_cmd = app.add_subcommand("convert", "Run the configured adapters");
  convert_cmd->add_option("--config", config_path, "Pipeline config (JSON)")->required();
  convert_cmd->add_option("--out", out_path, "Output directory (default: config output_dir)");
  convert_cmd->add_flag("--strict", strict, "Exit 2 if any record was skipped as MALFORMED");

  auto* validate_cmd = app.add_subcommand("validate", "Check a CREST JSONL file");
  validate_cmd->add_option("input", input, "CREST JSONL")->required();
  std::string norm_flag = "nfc+collapse-whitespace";
  validate_cmd->add_option("--normalization", norm_flag, "none | nfc+collapse-whitespace");

  auto* split_cmd = app.add_subcommand("split", "Assign leakage-free train/dev/test splits");
  split_cmd->add_option("input", input, "CREST JSONL")->required();
  split_cmd->add_option("--config", config_path, "Pipeline config supplying policy/ratios/seed");
  split_cmd->add_option("--policy", policy_flag,
                        "equality | containment | shared-substring[:min_chars]");
  split_cmd->add_option("--seed", seed, "Shuffle seed");
  split_cmd->add_option("--out", out_path, "Output directory")->required();

  auto* sequence_cmd = app.add_subcommand("sequence", "Write marker sequences per split");
  sequence_cmd->add_option("input", input, "Split CREST JSONL")->required();
  sequence_cmd->add_option("--config", config_path, "Pipeline config supplying markers");
  sequence_cmd->add_option("--task", task_flag, "direction | pair");
  sequence_cmd->add_flag("--with-direction", with_direction, "Cause span gets the span1 markers");
  sequence_cmd->add_option("--out", out_path, "Output directory")->required();

  auto* stats_cmd = app.add_subcommand("stats", "Corpus statistics");
  stats_cmd->add_option("input", input, "CREST JSONL")->required();
  stats_cmd->add_option("--skips", skips_path, "Skip report from convert");
  stats_cmd->add_option("--format", format, "table-text | json");
  stats_cmd->add_option("--out", out_path, "Also write the JSON report here");

  auto* run_cmd = app.add_subcommand("run", "convert, split, sequence and stats in one go");
  run_cmd->add_option("--config", config_path, "Pipeline config (JSON)")->required();
  run_cmd->add_option("--out", out_path, "Output directory (default: config output_dir)");
  run_cmd->add_flag("--strict", strict, "Exit 2 if any record was skipped as MALFORMED");
  run_cmd->add_option("--policy", policy_flag, "Override the overlap mode");
  run_cmd->add_option("--seed", seed, "Override the split seed");
  run_cmd->add_option("--task", task_flag, "direction | pair");
  run_cmd->add_flag("--with-direction", with_direction, "Cause span gets the span1 markers");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "USAGE", e.what());
    return kUsageError;
  }

  try {
    std::optional<PipelineConfig> cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    const PipelineConfig defaults;
    const PipelineConfig& c = cfg ? *cfg : defaults;

    auto policy = [&] {
      return policy_flag.empty() ? c.overlap_policy : parse_policy_flag(policy_flag, c.overlap_policy);
    };
    auto split_config = [&] {
      SplitConfig s = c.split;
      s.seed = require_seed(seed, cfg ? &*cfg : nullptr);
      return s;
    };
    const Task task = task_flag.empty() ? c.task : parse_task(task_flag);
    const bool directed = with_direction || c.with_direction;
    const fs::path out_dir = out_path.empty() ? c.output_dir : fs::path(out_path);

    if (convert_cmd->parsed()) {
      const Converted conv = convert(c);
      write_converted(conv, out_dir);
      out << "converted " << conv.corpus.relations.size() << " relations, " << conv.skips.size()
          << " skipped (" << conv.malformed() << " malformed) from " << conv.candidates
          << " candidates\n";
      if (strict && conv.malformed() > 0) {
        print_error(err, "MALFORMED", std::to_string(conv.malformed()) +
                                          " source records were malformed (--strict)");
        return kDataError;
      }
      return kOk;
    }

    if (validate_cmd->parsed()) {
      std::ifstream in(input);
      if (!in) throw DataError("IO_ERROR", "cannot open " + input);
      const auto reports = scan_corpus(in, parse_normalization(norm_flag));
      for (const auto& r : reports) out << "line " << r.line << ": " << r.code << ' ' << r.detail << '\n';
      out << reports.size() << " issues\n";
      return reports.empty() ? kOk : kDataError;
    }

    if (split_cmd->parsed()) {
      const SplitConfig sc = split_config();
      const Corpus corpus = load(input, c.normalization);
      const auto result = split(corpus, policy(), sc);
      write_corpus(result.corpus, out_dir / "split.jsonl");
      write_file(out_dir / "split_audit.json", split_report_to_json(result.report) + "\n");
      const auto& n = result.report.counts;
      out << "split " << result.report.relation_count << " relations in "
          << result.report.group_count << " groups: train " << n[0] << ", dev " << n[1]
          << ", test " << n[2] << "; audit passed (" << result.report.audit.pairs_checked
          << " pairs)\n";
      return kOk;
    }

    if (sequence_cmd->parsed()) {
      const Corpus corpus = load(input, c.normalization);
      write_sequences(corpus, task, c.markers, directed, out_dir, out);
      return kOk;
    }

    if (stats_cmd->parsed()) {
      const Corpus corpus = load(input, c.normalization);
      const auto skips = skips_path.empty() ? std::vector<SkipRecord>{} : read_skips(skips_path);
      const CorpusStats stats = compute_stats(corpus, skips);
      out << render_report(stats, parse_report_format(format));
      if (!out_path.empty()) write_file(out_path, render_report(stats, ReportFormat::json) + "\n");
      return kOk;
    }

    if (run_cmd->parsed()) {
      const SplitConfig sc = split_config();
      const OverlapPolicy p = policy();
      const Converted conv = convert(c);
      write_converted(conv, out_dir);
      out << "converted " << conv.corpus.relations.size() << " relations, " << conv.skips.size()
          << " skipped\n";
      if (strict && conv.malformed() > 0) {
        print_error(err, "MALFORMED", std::to_string(conv.malformed()) +
                                          " source records were malformed (--strict)");
        return kDataError;
      }
      if (conv.corpus.relations.empty()) throw DataError("EMPTY_CORPUS", "nothing to split");
      const auto result = split(conv.corpus, p, sc);
      write_corpus(result.corpus, out_dir / "split.jsonl");
      write_file(out_dir / "split_audit.json", split_report_to_json(result.report) + "\n");
      write_sequences(result.corpus, task, c.markers, directed, out_dir / "sequences", out);
      const CorpusStats stats = compute_stats(result.corpus, conv.skips);
      write_file(out_dir / "stats.json", render_report(stats, ReportFormat::json) + "\n");
      write_file(out_dir / "stats.txt", render_report(stats, ReportFormat::table_text));
      out << render_report(stats, ReportFormat::table_text);
      return kOk;
    }
  } catch (const ConfigError& e) {
    print_error(err, "CONFIG", e.what());
    return kUsageError;
  } catch (const LineError& e) {
    print_error(err, e.code(), e.what(), e.line());
    return kDataError;
  } catch (const DataError& e) {
    print_error(err, e.code(), e.what());
    return kDataError;
  } catch (const std::exception& e) {
    print_error(err, "INTERNAL", e.what());
    return kDataError;
  }
  return kUsageError;
}

}  // namespace crest::cli
