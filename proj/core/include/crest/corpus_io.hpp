#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crest/relation.hpp"

namespace crest {

// CREST JSON-lines: one relation per line, keys in this exact order:
//   original_id, dataset_id, span1, span2, signal, context, idx, label,
//   direction, split
// span1/span2/signal hold token strings; idx holds the matching
// {"span1": [[s,e],...], "span2": [...], "signal": [...]} offsets.

std::string relation_to_json(const CrestRelation& rel);

// Structural parse only; the result may still violate relation invariants.
// Throws DataError with code MALFORMED_RECORD.
CrestRelation relation_from_json(std::string_view line);

void write_corpus(const Corpus& corpus, std::ostream& out);
void write_corpus(const Corpus& corpus, const std::filesystem::path& path);

struct ReadOptions {
  // Defaults to the file stem when reading from a path.
  std::optional<std::string> source_name;
  Normalization normalization = Normalization::nfc_collapse_whitespace;
};

// Parses and validates every line. Throws LineError naming the 1-based line:
// code MALFORMED_RECORD for unparsable lines, the first issue name (e.g.
// OFFSET_MISMATCH) for schema-invalid records. Blank lines are ignored.
Corpus read_corpus(std::istream& in, const ReadOptions& options = {});
Corpus read_corpus(const std::filesystem::path& path, const ReadOptions& options = {});

// Line-by-line scan that never throws on bad records; used by `validate`.
struct LineReport {
  std::size_t line;
  std::string code;  // issue name or MALFORMED_RECORD
  std::string detail;
};
std::vector<LineReport> scan_corpus(std::istream& in, Normalization policy);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace crest
