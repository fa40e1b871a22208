#include "crest/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>

#include "crest/error.hpp"

namespace crest::text {
namespace {

// Decodes one code point at byte i. Ill-formed bytes decode to U+FFFD and
// consume one byte, so every byte belongs to exactly one code point.
char32_t next_point(std::string_view s, std::size_t& i) {
  const auto* p = reinterpret_cast<const uint8_t*>(s.data());
  int32_t idx = static_cast<int32_t>(i);
  const auto len = static_cast<int32_t>(s.size());
  UChar32 c = 0;
  U8_NEXT(p, idx, len, c);
  i = static_cast<std::size_t>(idx);
  return c < 0 ? U'�' : static_cast<char32_t>(c);
}

icu::UnicodeString to_icu(std::string_view utf8) {
  return icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
}

std::string from_icu(const icu::UnicodeString& s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

bool terminal(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }

}  // namespace

CodePoints::CodePoints(std::string_view utf8) {
  points_.reserve(utf8.size());
  byte_offsets_.reserve(utf8.size() + 1);
  std::size_t i = 0;
  while (i < utf8.size()) {
    byte_offsets_.push_back(i);
    points_.push_back(next_point(utf8, i));
  }
  byte_offsets_.push_back(utf8.size());
}

std::string_view CodePoints::slice(std::string_view utf8, std::size_t start,
                                   std::size_t end) const {
  return utf8.substr(byte_offsets_[start], byte_offsets_[end] - byte_offsets_[start]);
}

std::u32string to_u32(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) out.push_back(next_point(utf8, i));
  return out;
}

std::string to_utf8(std::u32string_view points) {
  std::string out;
  out.reserve(points.size());
  for (char32_t c : points) {
    uint8_t buf[4];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, 4, static_cast<UChar32>(c), error);
    if (error) {
      const char* repl = "\xEF\xBF\xBD";
      out.append(repl, 3);
    } else {
      out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
    }
  }
  return out;
}

std::size_t length(std::string_view utf8) {
  std::size_t n = 0;
  std::size_t i = 0;
  while (i < utf8.size()) {
    next_point(utf8, i);
    ++n;
  }
  return n;
}

bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)) != 0; }

bool is_upper(char32_t c) { return u_isupper(static_cast<UChar32>(c)) != 0; }

std::string nfc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  icu::UnicodeString out = norm->normalize(to_icu(utf8), status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  return from_icu(out);
}

std::string casefold(std::string_view utf8) {
  icu::UnicodeString s = to_icu(utf8);
  s.foldCase(U_FOLD_CASE_DEFAULT);
  return from_icu(s);
}

std::string collapse_whitespace(std::string_view utf8) {
  std::u32string out;
  bool pending = false;
  for (char32_t c : to_u32(utf8)) {
    if (is_space(c)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(U' ');
    pending = false;
    out.push_back(c);
  }
  return to_utf8(out);
}

std::vector<Range> whitespace_tokens(const std::u32string& points, std::int64_t start,
                                     std::int64_t end) {
  std::vector<Range> out;
  const auto n = static_cast<std::int64_t>(points.size());
  start = std::max<std::int64_t>(start, 0);
  end = std::min(end, n);
  std::int64_t i = start;
  while (i < end) {
    while (i < end && is_space(points[i])) ++i;
    if (i >= end) break;
    std::int64_t j = i;
    while (j < end && !is_space(points[j])) ++j;
    out.push_back({i, j});
    i = j;
  }
  return out;
}

bool sentence_boundary_within(const std::u32string& points, std::int64_t gap_start,
                              std::int64_t gap_end) {
  const auto n = static_cast<std::int64_t>(points.size());
  gap_start = std::max<std::int64_t>(gap_start, 0);
  gap_end = std::min(gap_end, n);
  for (std::int64_t i = gap_start; i < gap_end; ++i) {
    if (!terminal(points[i])) continue;
    std::int64_t j = i + 1;
    if (j >= n || !is_space(points[j])) continue;
    while (j < n && is_space(points[j])) ++j;
    if (j <= gap_end && j < n && is_upper(points[j])) return true;
  }
  return false;
}

Range sentence_window(const std::u32string& points, std::int64_t start, std::int64_t end) {
  const auto n = static_cast<std::int64_t>(points.size());
  start = std::clamp<std::int64_t>(start, 0, n);
  end = std::clamp<std::int64_t>(end, start, n);

  // Backward: stop after a newline or after "<terminal><space>+<Upper>" whose
  // uppercase letter is at or before start.
  std::int64_t s = start;
  while (s > 0) {
    const char32_t prev = points[s - 1];
    if (prev == U'\n' || prev == U'\r') break;
    if (is_space(prev)) {
      std::int64_t k = s - 1;
      while (k >= 0 && is_space(points[k]) && points[k] != U'\n') --k;
      if (k >= 0 && terminal(points[k])) {
        std::int64_t first = k + 1;
        while (first < n && is_space(points[first])) ++first;
        if (first < n && first <= start && is_upper(points[first])) break;
      }
    }
    --s;
  }

  // Forward: include a terminal punctuation run that ends the sentence.
  std::int64_t e = end > start ? end - 1 : end;
  while (e < n) {
    const char32_t c = points[e];
    if (c == U'\n' || c == U'\r') break;
    if (terminal(c)) {
      std::int64_t k = e + 1;
      while (k < n && (terminal(points[k]) || points[k] == U'"' || points[k] == U'\'')) ++k;
      std::int64_t m = k;
      while (m < n && is_space(points[m]) && points[m] != U'\n') ++m;
      if (k >= n || m >= n || points[m] == U'\n' ||
          (m > k && is_upper(points[m]))) {
        e = k;
        break;
      }
    }
    ++e;
  }

  while (s < start && is_space(points[s])) ++s;
  e = std::max(e, end);
  while (e > end && is_space(points[e - 1])) --e;
  return {s, e};
}

}  // namespace crest::text
