#include <gtest/gtest.h>

#include "crest/text.hpp"

namespace {

using namespace crest::text;

TEST(Text, CodePointLength) {
  EXPECT_EQ(length("abc"), 3u);
  EXPECT_EQ(length("café"), 4u);
  EXPECT_EQ(length("東京"), 2u);
  EXPECT_EQ(length("\xF0\x9F\x98\x80"), 1u);
  EXPECT_EQ(to_utf8(to_u32("naïve 東京")), "naïve 東京");
}

TEST(Text, CodePointsSlice) {
  const std::string s = "a café b";
  CodePoints cps(s);
  ASSERT_EQ(cps.size(), 8u);
  EXPECT_EQ(cps.slice(s, 2, 6), "café");
  EXPECT_EQ(cps.byte_offset(8), s.size());
}

TEST(Text, NfcAndCasefold) {
  EXPECT_EQ(nfc("cafe\xCC\x81"), "caf\xC3\xA9");
  EXPECT_EQ(length(nfc("cafe\xCC\x81")), 4u);
  EXPECT_EQ(casefold("StraSSe Ärger"), "strasse ärger");
}

TEST(Text, CollapseWhitespace) {
  EXPECT_EQ(collapse_whitespace("  a \t\n b  c "), "a b c");
  EXPECT_EQ(collapse_whitespace("a  b"), "a b");
  EXPECT_EQ(collapse_whitespace(""), "");
}

TEST(Text, WhitespaceTokens) {
  const auto p = to_u32("  ab c\tdé ");
  const auto t = whitespace_tokens(p, 0, static_cast<std::int64_t>(p.size()));
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0], (Range{2, 4}));
  EXPECT_EQ(t[1], (Range{5, 6}));
  EXPECT_EQ(t[2], (Range{7, 9}));
  EXPECT_TRUE(whitespace_tokens(p, 0, 2).empty());
}

TEST(Text, SentenceBoundary) {
  const auto p = to_u32("It rained. The river rose. then");
  EXPECT_TRUE(sentence_boundary_within(p, 3, 15));
  EXPECT_FALSE(sentence_boundary_within(p, 11, 20));
  // lowercase after the full stop does not count
  EXPECT_FALSE(sentence_boundary_within(p, 21, 31));
}

TEST(Text, SentenceWindow) {
  const std::string s = "First one here. The cow produced milk. Last one!\nNew line text.";
  const auto p = to_u32(s);
  const auto at = static_cast<std::int64_t>(s.find("cow"));
  const Range w = sentence_window(p, at, at + 3);
  EXPECT_EQ(to_utf8(std::u32string_view(p).substr(w.start, w.end - w.start)), "The cow produced milk.");

  const auto last = static_cast<std::int64_t>(s.find("Last"));
  const auto line = static_cast<std::int64_t>(s.find("line"));
  const Range across = sentence_window(p, last, line + 4);
  EXPECT_EQ(to_utf8(std::u32string_view(p).substr(across.start, across.end - across.start)),
            "Last one!\nNew line text.");
}

}  // namespace
