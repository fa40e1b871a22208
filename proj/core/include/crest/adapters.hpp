#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "crest/relation.hpp"

namespace crest {

enum class SkipReason { excluded_sense, excluded_relation_type, malformed, missing_text };

std::string_view skip_reason_name(SkipReason r);
SkipReason parse_skip_reason(std::string_view name);

struct SkipRecord {
  std::string original_id;
  SkipReason reason;
  std::string detail;
  int dataset_id = 0;

  friend bool operator==(const SkipRecord&, const SkipRecord&) = default;
};

// Output of one adapter run. candidates counts every source annotation the
// adapter looked at, so relations.size() + skips.size() == candidates.
struct ParseResult {
  std::vector<CrestRelation> relations;
  std::vector<SkipRecord> skips;
  std::size_t candidates = 0;

  void append(ParseResult other);
};

// Dataset ids follow the order of the nine converted resources.
namespace dataset {
inline constexpr int semeval2007 = 1;
inline constexpr int semeval2010 = 2;
inline constexpr int event_causality = 3;
inline constexpr int causal_timebank = 4;
inline constexpr int event_storyline = 5;
inline constexpr int caters = 6;
inline constexpr int because = 7;
inline constexpr int copa = 8;
inline constexpr int pdtb3 = 9;
}  // namespace dataset

// Per-file parsers. Each reads one source document (or annotation file plus
// its sibling text) and returns raw relations with code point offsets into
// the unnormalized context. dataset_id and normalization are applied by
// parse_with_adapter.

// SemEval blocks: `<id> "<sentence with <e1>..</e1> and <e2>..</e2>>"` then a
// relation line. 2007 relation lines carry `= "true"|"false"`.
enum class SemEvalTask { y2007, y2010 };
ParseResult parse_semeval(std::string_view content, std::string_view doc_id, SemEvalTask task);

// EventStoryLine CAT XML: <token t_id sentence number>, markables with
// <token_anchor t_id>, and PLOT_LINK elements with <source m_id>/<target m_id>.
ParseResult parse_eventstoryline(std::string_view xml, std::string_view doc_id);

// COPA XML: <item id asks-for most-plausible-alternative><p/><a1/><a2/></item>.
ParseResult parse_copa(std::string_view xml, std::string_view doc_id);

// PDTB3 gold records (pipe-delimited, one relation per line) against the raw
// document text.
ParseResult parse_pdtb3(std::string_view records, std::string_view raw_text,
                        std::string_view doc_id);
// Same file, raw text unavailable: every record is skipped as MISSING_TEXT.
ParseResult skip_missing_text(std::string_view records, std::string_view doc_id,
                              std::string_view detail);

// brat standoff (.ann) with the document text (.txt).
ParseResult parse_because(std::string_view ann, std::string_view txt, std::string_view doc_id);
ParseResult parse_caters(std::string_view ann, std::string_view txt, std::string_view doc_id);
ParseResult parse_eventcausality(std::string_view ann, std::string_view txt,
                                 std::string_view doc_id);

// TimeML-style XML with EVENT, SIGNAL/C-SIGNAL, MAKEINSTANCE and CLINK.
ParseResult parse_causal_timebank(std::string_view xml, std::string_view doc_id);

struct AdapterSpec {
  int dataset_id;
  std::string name;          // registry key, e.g. "pdtb3"
  std::string display_name;  // e.g. "PDTB3"
  bool has_signal;
  // Parses one input path; resolves sibling files (.txt for standoff) itself.
  std::function<ParseResult(const std::filesystem::path&)> parse_file;
};

const std::vector<AdapterSpec>& adapter_registry();
const AdapterSpec& adapter_by_id(int dataset_id);       // throws ConfigError
const AdapterSpec& adapter_by_name(std::string_view name);  // throws ConfigError
std::string dataset_display_name(int dataset_id);

// Registry entry point. Parses every file (sorted by path), stamps the
// adapter's dataset_id, normalizes contexts when asked, validates each
// relation and turns any invalid one into a MALFORMED skip, and enforces
// the adapter's signal discipline.
ParseResult parse_with_adapter(const AdapterSpec& adapter,
                               std::vector<std::filesystem::path> files,
                               Normalization normalization = Normalization::nfc_collapse_whitespace,
                               int declared_split = -1);

std::string skip_to_json(const SkipRecord& skip);
SkipRecord skip_from_json(std::string_view line);

}  // namespace crest
