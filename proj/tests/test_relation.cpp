#include <gtest/gtest.h>

#include "crest/error.hpp"
#include "crest/relation.hpp"
#include "support/flood.hpp"
#include "support/oracles.hpp"

namespace {

using crest::CrestRelation;
using crest::IssueCode;
using flood_case::flood;
using flood_case::kFlood;

TEST(FloodExample, HandOffsetsMatchTheSentence) {
  // recomputes the literal offsets in flood.hpp from the sentence itself
  EXPECT_EQ(oracle::locate(kFlood, "flood"), flood().span1);
  EXPECT_EQ(oracle::locate(kFlood, "deluge of rain"), flood().span2);
}

TEST(FloodExample, Validates) {
  EXPECT_TRUE(crest::validate_relation(flood()).empty());
  EXPECT_TRUE(crest::validate_relation(flood(), crest::Normalization::nfc_collapse_whitespace).empty());
}

class MutationSuite : public ::testing::TestWithParam<flood_case::Mutation> {};

TEST_P(MutationSuite, ProducesExactlyTheMatchingCode) {
  CrestRelation rel = flood();
  GetParam().apply(rel);
  const auto report = crest::validate_relation(rel);
  ASSERT_EQ(report.size(), 1u) << crest::describe(report);
  EXPECT_EQ(report[0].code, GetParam().expected) << crest::describe(report);
}

INSTANTIATE_TEST_SUITE_P(SingleField, MutationSuite, ::testing::ValuesIn(flood_case::mutations()),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(Validation, NonCausalWithoutDirectionIsFine) {
  CrestRelation rel = flood();
  rel.label = 0;
  rel.direction = -1;
  EXPECT_TRUE(crest::validate_relation(rel).empty());
}

TEST(Validation, GarbageNeverThrows) {
  CrestRelation rel;
  rel.context = "\xff\xfe broken utf8";
  rel.span1 = {{"x", "y"}, {{5, 1}}};
  rel.label = 7;
  rel.direction = 9;
  rel.split = 11;
  const auto report = crest::validate_relation(rel, crest::Normalization::nfc_collapse_whitespace);
  EXPECT_TRUE(crest::has_issue(report, IssueCode::bad_label));
  EXPECT_TRUE(crest::has_issue(report, IssueCode::bad_direction));
  EXPECT_TRUE(crest::has_issue(report, IssueCode::bad_split));
  EXPECT_TRUE(crest::has_issue(report, IssueCode::offset_count_mismatch));
  EXPECT_TRUE(crest::has_issue(report, IssueCode::empty_span));
}

TEST(Validation, OffsetsCountCodePoints) {
  CrestRelation rel;
  rel.context = "Le café fermé à midi.";
  rel.span1 = oracle::locate("Le cafe ferme a midi.", "cafe");
  rel.span1.tokens = {"café"};
  rel.span2 = {{"midi."}, {{16, 21}}};
  rel.label = 0;
  EXPECT_TRUE(crest::validate_relation(rel).empty()) << crest::describe(crest::validate_relation(rel));
}

TEST(Validation, DecomposedTokenAcceptedOnlyUnderNfcPolicy) {
  CrestRelation rel;
  rel.context = "un caf\xC3\xA9 noir";
  rel.span1 = {{"cafe\xCC\x81"}, {{3, 7}}};
  rel.span2 = {{"noir"}, {{8, 12}}};
  EXPECT_TRUE(crest::has_issue(crest::validate_relation(rel), IssueCode::offset_mismatch));
  EXPECT_TRUE(crest::validate_relation(rel, crest::Normalization::nfc_collapse_whitespace).empty());
}

TEST(Corpus, DuplicateIdsInTheLedger) {
  crest::Corpus corpus;
  corpus.relations = {flood(), flood()};
  corpus.relations[1].span1.offsets[0] = {35, 39};
  const auto ledger = crest::validate_corpus(corpus);
  ASSERT_EQ(ledger.size(), 2u);
  EXPECT_EQ(ledger[0], (crest::LedgerEntry{1, IssueCode::offset_mismatch}));
  EXPECT_EQ(ledger[1], (crest::LedgerEntry{1, IssueCode::duplicate_id}));

  corpus.relations[1] = flood();
  corpus.relations[1].dataset_id = 2;
  EXPECT_TRUE(crest::validate_corpus(corpus).empty());
}

TEST(Normalize, ComposesAndCollapsesWhileRemappingOffsets) {
  CrestRelation rel;
  rel.context = "  The   cafe\xCC\x81 \t closed\nearly. ";
  const auto cps = crest::text::to_u32(rel.context);
  rel.span1 = crest::span_from_range(cps, 0, 15);  // The café
  rel.span2 = crest::span_from_range(cps, 16, static_cast<std::int64_t>(cps.size()));
  rel.label = 1;
  rel.direction = 0;
  ASSERT_TRUE(crest::validate_relation(rel).empty());

  const auto n = crest::normalize_relation(rel);
  EXPECT_EQ(n.context, "The caf\xC3\xA9 closed early.");
  EXPECT_EQ(n.span1.offsets, oracle::locate("The cafe closed early.", "The cafe").offsets);
  EXPECT_EQ(n.span1.tokens[1], "caf\xC3\xA9");
  EXPECT_EQ(n.span2.offsets, oracle::locate("The cafe closed early.", "closed early.").offsets);
  EXPECT_TRUE(crest::validate_relation(n).empty());
  EXPECT_EQ(crest::normalize_relation(n), n);
}

TEST(Normalize, FlipDirection) {
  EXPECT_EQ(crest::flip_direction(flood()).direction, 0);
  CrestRelation r = flood();
  r.label = 0;
  r.direction = -1;
  EXPECT_EQ(crest::flip_direction(r).direction, -1);
}

TEST(Names, ParseRoundTrip) {
  for (auto n : {crest::Normalization::none, crest::Normalization::nfc_collapse_whitespace}) {
    EXPECT_EQ(crest::parse_normalization(crest::normalization_name(n)), n);
  }
  EXPECT_THROW(crest::parse_normalization("nfkc"), crest::ConfigError);
  EXPECT_EQ(crest::issue_name(IssueCode::span_interleave), "SPAN_INTERLEAVE");
}

}  // namespace
