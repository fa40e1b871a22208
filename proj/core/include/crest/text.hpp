#pragma once

// Unicode helpers. Every character index in the toolkit counts Unicode
// scalar values (code points), never bytes.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace crest::text {

// A UTF-8 string decoded to code points, remembering where each code point
// starts in the original bytes. byte_offsets has size() + 1 entries.
class CodePoints {
 public:
  explicit CodePoints(std::string_view utf8);

  std::size_t size() const noexcept { return points_.size(); }
  char32_t operator[](std::size_t i) const { return points_[i]; }
  const std::u32string& points() const noexcept { return points_; }

  std::size_t byte_offset(std::size_t index) const { return byte_offsets_[index]; }

  // UTF-8 bytes of code points [start, end). Caller guarantees bounds.
  std::string_view slice(std::string_view utf8, std::size_t start,
                         std::size_t end) const;

 private:
  std::u32string points_;
  std::vector<std::size_t> byte_offsets_;
};

std::u32string to_u32(std::string_view utf8);
std::string to_utf8(std::u32string_view points);
std::size_t length(std::string_view utf8);

bool is_space(char32_t c);
bool is_upper(char32_t c);

std::string nfc(std::string_view utf8);
std::string casefold(std::string_view utf8);

// Replaces each whitespace run with one ASCII space and trims both ends.
std::string collapse_whitespace(std::string_view utf8);

struct Range {
  std::int64_t start = 0;
  std::int64_t end = 0;

  friend bool operator==(const Range&, const Range&) = default;
};

// Whitespace-delimited tokens inside [start, end) of a code point sequence.
std::vector<Range> whitespace_tokens(const std::u32string& points, std::int64_t start,
                                     std::int64_t end);

// True when a sentence boundary (terminal . ! or ? followed by whitespace and
// an uppercase letter) lies within [gap_start, gap_end). The uppercase letter
// may sit exactly at gap_end.
bool sentence_boundary_within(const std::u32string& points, std::int64_t gap_start,
                              std::int64_t gap_end);

// Widens [start, end) outward to the enclosing sentence(s). Newlines are hard
// boundaries. Leading and trailing whitespace of the window is dropped.
Range sentence_window(const std::u32string& points, std::int64_t start, std::int64_t end);

}  // namespace crest::text
