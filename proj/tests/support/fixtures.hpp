#pragma once

// The shipped fixture files, what each should produce, and a way to count
// their candidate annotations without going through the adapters.

#include <filesystem>
#include <map>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "crest/adapters.hpp"
#include "crest/corpus_io.hpp"
#include "support/oracles.hpp"

namespace fixtures {

inline std::filesystem::path root() { return CREST_FIXTURES_DIR; }

struct Case {
  std::string adapter;
  std::vector<std::string> files;  // relative to root()
  std::size_t relations;
  std::map<crest::SkipReason, std::size_t> skips;
  std::size_t with_signal;
};

inline const std::vector<Case>& cases() {
  using R = crest::SkipReason;
  static const std::vector<Case> all = {
      {"semeval2007", {"semeval2007/task4_cause_effect.txt"}, 3, {{R::malformed, 1}}, 0},
      {"semeval2010", {"semeval2010/train_file.txt"}, 4, {{R::malformed, 1}}, 0},
      {"eventcausality", {"eventcausality/apw_flood.ann"}, 3, {{R::excluded_relation_type, 2}}, 0},
      {"causal-timebank", {"causal-timebank/wsj_0126.tml"}, 3, {{R::malformed, 1}}, 1},
      {"eventstoryline",
       {"eventstoryline/1_1ecbplus.xml.xml"},
       4,
       {{R::excluded_relation_type, 1}, {R::malformed, 1}},
       1},
      {"caters", {"caters/story_alarm.ann"}, 4, {{R::excluded_relation_type, 3}}, 0},
      {"because", {"because/nyt_sample.ann"}, 3, {{R::excluded_relation_type, 1}, {R::malformed, 3}}, 3},
      {"copa", {"copa/copa-dev.xml"}, 6, {{R::malformed, 1}}, 0},
      {"pdtb3",
       {"pdtb3/gold/00/wsj_0003", "pdtb3/gold/00/wsj_0004"},
       3,
       {{R::excluded_sense, 2}, {R::excluded_relation_type, 1}, {R::malformed, 1}, {R::missing_text, 1}},
       2},
  };
  return all;
}

inline const Case& find(const std::string& adapter) {
  for (const auto& c : cases()) {
    if (c.adapter == adapter) return c;
  }
  throw std::out_of_range(adapter);
}

inline std::vector<std::filesystem::path> files(const Case& c) {
  std::vector<std::filesystem::path> out;
  for (const auto& f : c.files) out.push_back(root() / f);
  return out;
}

// Source annotations per file, counted straight from the raw text.
inline std::size_t count_candidates(const Case& c) {
  std::size_t n = 0;
  for (const auto& f : files(c)) {
    const std::string s = crest::read_file(f);
    if (c.adapter == "semeval2007" || c.adapter == "semeval2010") {
      n += oracle::count_lines(s, R"(^\S+\t")");
    } else if (c.adapter == "eventcausality" || c.adapter == "caters") {
      n += oracle::count_lines(s, R"(^R\d+\t)");
    } else if (c.adapter == "because") {
      n += oracle::count_lines(s, R"(^E\d+\t)");
    } else if (c.adapter == "causal-timebank") {
      n += oracle::count_lines(s, R"(<CLINK\b)");
    } else if (c.adapter == "eventstoryline") {
      n += oracle::count_lines(s, R"(<PLOT_LINK\b)");
    } else if (c.adapter == "copa") {
      // a well-formed item holds two candidate pairs, a broken one counts once
      const std::regex item(R"(<item\b[\s\S]*?</item>)");
      for (auto it = std::sregex_iterator(s.begin(), s.end(), item); it != std::sregex_iterator(); ++it) {
        const std::string body = it->str();
        const bool both = body.find("<a1>") != std::string::npos && body.find("<a2>") != std::string::npos;
        n += both ? 2 : 1;
      }
    } else if (c.adapter == "pdtb3") {
      n += oracle::count_lines(s, R"(^.*\S.*$)");
    }
  }
  return n;
}

}  // namespace fixtures
