#include "crest/corpus_io.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <set>
#include <sstream>

#include "crest/error.hpp"

namespace crest {
namespace {

using ojson = nlohmann::ordered_json;

ojson tokens_json(const TokenSpan& span) {
  ojson arr = ojson::array();
  for (const auto& t : span.tokens) arr.push_back(t);
  return arr;
}

ojson offsets_json(const TokenSpan& span) {
  ojson arr = ojson::array();
  for (const auto& r : span.offsets) arr.push_back(ojson::array({r.start, r.end}));
  return arr;
}

[[noreturn]] void malformed(const std::string& what) {
  throw DataError("MALFORMED_RECORD", what);
}

const ojson& member(const ojson& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_member(const ojson& obj, const char* key) {
  const ojson& v = member(obj, key);
  if (!v.is_number_integer()) malformed(std::string("field \"") + key + "\" must be an integer");
  const auto value = v.get<std::int64_t>();
  if (value < INT32_MIN || value > INT32_MAX) malformed(std::string("field \"") + key + "\" out of range");
  return static_cast<int>(value);
}

TokenSpan span_member(const ojson& obj, const ojson& idx, const char* key) {
  TokenSpan span;
  const ojson& toks = member(obj, key);
  if (!toks.is_array()) malformed(std::string("field \"") + key + "\" must be a list of strings");
  for (const auto& t : toks) {
    if (!t.is_string()) malformed(std::string("field \"") + key + "\" must be a list of strings");
    span.tokens.push_back(t.get<std::string>());
  }
  const ojson& offs = member(idx, key);
  if (!offs.is_array()) malformed(std::string("idx.") + key + " must be a list of pairs");
  for (const auto& pair : offs) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      malformed(std::string("idx.") + key + " must be a list of [start, end] pairs");
    }
    span.offsets.push_back({pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>()});
  }
  return span;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

std::string relation_to_json(const CrestRelation& rel) {
  ojson j;
  j["original_id"] = rel.original_id;
  j["dataset_id"] = rel.dataset_id;
  j["span1"] = tokens_json(rel.span1);
  j["span2"] = tokens_json(rel.span2);
  j["signal"] = tokens_json(rel.signal);
  j["context"] = rel.context;
  ojson idx;
  idx["span1"] = offsets_json(rel.span1);
  idx["span2"] = offsets_json(rel.span2);
  idx["signal"] = offsets_json(rel.signal);
  j["idx"] = std::move(idx);
  j["label"] = rel.label;
  j["direction"] = rel.direction;
  j["split"] = rel.split;
  return j.dump(-1, ' ', false, ojson::error_handler_t::strict);
}

CrestRelation relation_from_json(std::string_view line) {
  ojson j;
  try {
    j = ojson::parse(line);
  } catch (const ojson::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) malformed("record is not a JSON object");

  CrestRelation rel;
  const ojson& id = member(j, "original_id");
  if (!id.is_string()) malformed("field \"original_id\" must be a string");
  rel.original_id = id.get<std::string>();
  rel.dataset_id = int_member(j, "dataset_id");
  const ojson& ctx = member(j, "context");
  if (!ctx.is_string()) malformed("field \"context\" must be a string");
  rel.context = ctx.get<std::string>();
  const ojson& idx = member(j, "idx");
  if (!idx.is_object()) malformed("field \"idx\" must be an object");
  rel.span1 = span_member(j, idx, "span1");
  rel.span2 = span_member(j, idx, "span2");
  rel.signal = span_member(j, idx, "signal");
  rel.label = int_member(j, "label");
  rel.direction = int_member(j, "direction");
  rel.split = int_member(j, "split");
  return rel;
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& rel : corpus.relations) out << relation_to_json(rel) << '\n';
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ostringstream buf;
  write_corpus(corpus, buf);
  write_file(path, buf.str());
}

Corpus read_corpus(std::istream& in, const ReadOptions& options) {
  Corpus corpus;
  corpus.source_name = options.source_name.value_or("");
  corpus.normalization = options.normalization;

  std::set<std::pair<int, std::string>> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    CrestRelation rel;
    try {
      rel = relation_from_json(line);
    } catch (const DataError& e) {
      throw LineError(e.code(), lineno, e.what());
    }
    const auto report = validate_relation(rel, corpus.normalization);
    if (!report.empty()) {
      throw LineError(std::string(issue_name(report.front().code)), lineno, describe(report));
    }
    if (!seen.emplace(rel.dataset_id, rel.original_id).second) {
      throw LineError("DUPLICATE_ID", lineno,
                      "duplicate original_id \"" + rel.original_id + "\" in dataset " +
                          std::to_string(rel.dataset_id));
    }
    corpus.relations.push_back(std::move(rel));
  }
  return corpus;
}

Corpus read_corpus(const std::filesystem::path& path, const ReadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("IO_ERROR", "cannot open " + path.string());
  ReadOptions opts = options;
  if (!opts.source_name) opts.source_name = path.stem().string();
  return read_corpus(in, opts);
}

std::vector<LineReport> scan_corpus(std::istream& in, Normalization policy) {
  std::vector<LineReport> out;
  std::set<std::pair<int, std::string>> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    CrestRelation rel;
    try {
      rel = relation_from_json(line);
    } catch (const DataError& e) {
      out.push_back({lineno, e.code(), e.what()});
      continue;
    }
    for (const auto& issue : validate_relation(rel, policy)) {
      out.push_back({lineno, std::string(issue_name(issue.code)), issue.field + ": " + issue.detail});
    }
    if (!seen.emplace(rel.dataset_id, rel.original_id).second) {
      out.push_back({lineno, "DUPLICATE_ID", "duplicate original_id \"" + rel.original_id + "\""});
    }
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("IO_ERROR", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("IO_ERROR", "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw DataError("IO_ERROR", "write failed for " + path.string());
}

}  // namespace crest
