#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "crest/adapters.hpp"
#include "crest/relation.hpp"

namespace crest::detail {

std::string make_id(std::string_view doc_id, std::string_view local);

SkipRecord skip(std::string original_id, SkipReason reason, std::string detail);

std::string trim(std::string_view s);
std::vector<std::string_view> split_lines(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

bool in_bounds(const std::vector<Range>& ranges, std::size_t length);

// Smallest range covering every non-empty range list.
Range cover(std::initializer_list<const std::vector<Range>*> lists);

// Relation whose context is doc[window) and whose spans are the whitespace
// tokens of the given absolute ranges, rebased onto the window.
CrestRelation windowed_relation(const std::u32string& doc, Range window,
                                const std::vector<Range>& span1,
                                const std::vector<Range>& span2,
                                const std::vector<Range>& signal);

// Same, with the window widened to the enclosing sentence(s).
CrestRelation sentence_relation(const std::u32string& doc, const std::vector<Range>& span1,
                                const std::vector<Range>& span2,
                                const std::vector<Range>& signal);

}  // namespace crest::detail
