#include "adapters/common.hpp"

#include <algorithm>
#include <limits>

namespace crest::detail {

std::string make_id(std::string_view doc_id, std::string_view local) {
  std::string id(doc_id);
  id += ':';
  id += local;
  return id;
}

SkipRecord skip(std::string original_id, SkipReason reason, std::string detail) {
  return SkipRecord{std::move(original_id), reason, std::move(detail), 0};
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = s.find(sep, pos);
    if (hit == std::string_view::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, hit - pos));
    pos = hit + 1;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view s) {
  auto lines = split(s, '\n');
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

bool in_bounds(const std::vector<Range>& ranges, std::size_t length) {
  return std::all_of(ranges.begin(), ranges.end(), [length](const Range& r) {
    return r.start >= 0 && r.start <= r.end && r.end <= static_cast<std::int64_t>(length);
  });
}

Range cover(std::initializer_list<const std::vector<Range>*> lists) {
  Range r{std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::min()};
  for (const auto* list : lists) {
    for (const auto& x : *list) {
      r.start = std::min(r.start, x.start);
      r.end = std::max(r.end, x.end);
    }
  }
  if (r.start > r.end) return {0, 0};
  return r;
}

CrestRelation windowed_relation(const std::u32string& doc, Range window,
                                const std::vector<Range>& span1,
                                const std::vector<Range>& span2,
                                const std::vector<Range>& signal) {
  CrestRelation rel;
  rel.context = text::to_utf8(std::u32string_view(doc).substr(
      static_cast<std::size_t>(window.start), static_cast<std::size_t>(window.end - window.start)));
  rel.span1 = rebase(span_from_ranges(doc, span1), window.start);
  rel.span2 = rebase(span_from_ranges(doc, span2), window.start);
  rel.signal = rebase(span_from_ranges(doc, signal), window.start);
  return rel;
}

CrestRelation sentence_relation(const std::u32string& doc, const std::vector<Range>& span1,
                                const std::vector<Range>& span2,
                                const std::vector<Range>& signal) {
  const Range all = cover({&span1, &span2, &signal});
  return windowed_relation(doc, text::sentence_window(doc, all.start, all.end), span1, span2,
                           signal);
}

}  // namespace crest::detail
