// SemEval-2007 task 4 and SemEval-2010 task 8 share the same block layout:
//
//   8	"The <e1>cow</e1> produced the <e2>milk</e2>."
//   Cause-Effect(e1,e2)
//   Comment: ...
//
// 2007 relation lines look like
//   WordNet(e1) = "...", Cause-Effect(e2,e1) = "true", Query = "..."

#include <optional>
#include <regex>

#include "adapters/common.hpp"
#include "crest/adapters.hpp"

namespace crest {
namespace {

using detail::make_id;
using detail::skip;

const std::regex kSentenceLine(R"rx(^\s*(\S+)\s+"(.*)"\s*$)rx");
const std::regex kRelation2010(R"(^\s*([A-Za-z][A-Za-z-]*)(?:\((e[12]),(e[12])\))?\s*$)");
const std::regex kCause2007(R"rx(Cause-Effect\((e[12]),(e[12])\)\s*=\s*"(true|false)")rx");
const std::regex kAny2007(R"rx(([A-Za-z][A-Za-z-]*)\((e[12]),(e[12])\)\s*=\s*"(true|false)")rx");

struct Tagged {
  std::u32string text;
  Range e1{-1, -1};
  Range e2{-1, -1};
  std::string error;
};

// Strips the four entity tags, recording where each entity's content lands.
Tagged strip_tags(const std::u32string& s) {
  static const std::u32string kTags[4] = {U"<e1>", U"</e1>", U"<e2>", U"</e2>"};
  Tagged out;
  int seen[4] = {0, 0, 0, 0};
  int open = -1;  // entity currently open: 0 or 1
  std::size_t i = 0;
  while (i < s.size()) {
    int tag = -1;
    for (int t = 0; t < 4; ++t) {
      if (s.compare(i, kTags[t].size(), kTags[t]) == 0) {
        tag = t;
        break;
      }
    }
    if (tag < 0) {
      out.text.push_back(s[i++]);
      continue;
    }
    i += kTags[tag].size();
    ++seen[tag];
    const int entity = tag / 2;
    const bool opening = tag % 2 == 0;
    const auto pos = static_cast<std::int64_t>(out.text.size());
    Range& r = entity == 0 ? out.e1 : out.e2;
    if (opening) {
      if (open != -1) {
        out.error = "entity tag opened before the previous one closed";
        return out;
      }
      open = entity;
      r.start = pos;
    } else {
      if (open != entity) {
        out.error = "closing tag without matching opening tag";
        return out;
      }
      open = -1;
      r.end = pos;
    }
  }
  for (int t = 0; t < 4; ++t) {
    if (seen[t] != 1) {
      out.error = "expected exactly one of each <e1>, </e1>, <e2>, </e2>";
      return out;
    }
  }
  return out;
}

struct Mapping {
  int label;
  int direction;
};

std::optional<Mapping> relation_mapping(std::string_view line, SemEvalTask task) {
  std::smatch m;
  const std::string s(line);
  if (task == SemEvalTask::y2007) {
    if (std::regex_search(s, m, kCause2007)) {
      if (m[3] == "false") return Mapping{kNonCausal, kNoDirection};
      return Mapping{kCausal, m[1] == "e1" ? kSpan1CausesSpan2 : kSpan2CausesSpan1};
    }
    if (std::regex_search(s, m, kAny2007)) return Mapping{kNonCausal, kNoDirection};
    return std::nullopt;
  }
  if (!std::regex_match(s, m, kRelation2010)) return std::nullopt;
  if (m[1] == "Cause-Effect") {
    if (!m[2].matched || m[2] == m[3]) return std::nullopt;
    return Mapping{kCausal, m[2] == "e1" ? kSpan1CausesSpan2 : kSpan2CausesSpan1};
  }
  return Mapping{kNonCausal, kNoDirection};
}

}  // namespace

ParseResult parse_semeval(std::string_view content, std::string_view doc_id, SemEvalTask task) {
  ParseResult result;
  const auto lines = detail::split_lines(content);

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line(lines[i]);
    std::smatch m;
    if (!std::regex_match(line, m, kSentenceLine)) continue;

    ++result.candidates;
    const std::string id = make_id(doc_id, m[1].str());

    std::optional<std::string_view> relation_line;
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const std::string t = detail::trim(lines[j]);
      if (t.empty() || t.rfind("Comment", 0) == 0) continue;
      std::smatch next;
      const std::string raw(lines[j]);
      if (std::regex_match(raw, next, kSentenceLine)) break;
      relation_line = lines[j];
      i = j;
      break;
    }
    if (!relation_line) {
      result.skips.push_back(skip(id, SkipReason::malformed, "sentence without a relation line"));
      continue;
    }

    const Tagged tagged = strip_tags(text::to_u32(m[2].str()));
    if (!tagged.error.empty()) {
      result.skips.push_back(skip(id, SkipReason::malformed, tagged.error));
      continue;
    }
    const auto mapping = relation_mapping(*relation_line, task);
    if (!mapping) {
      result.skips.push_back(skip(id, SkipReason::malformed,
                                  "unparsable relation line: " + std::string(*relation_line)));
      continue;
    }

    CrestRelation rel = detail::windowed_relation(
        tagged.text, {0, static_cast<std::int64_t>(tagged.text.size())}, {tagged.e1}, {tagged.e2}, {});
    rel.original_id = id;
    rel.label = mapping->label;
    rel.direction = mapping->direction;
    result.relations.push_back(std::move(rel));
  }
  return result;
}

}  // namespace crest
