#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>

#include "crest/stats.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace {

crest::CrestRelation rel(const std::string& id, int dataset, int label, bool signal, int split) {
  const std::string ctx = "Heavy rain fell so the river rose quickly.";
  crest::CrestRelation r;
  r.original_id = id;
  r.dataset_id = dataset;
  r.context = ctx;
  r.span1 = oracle::locate(ctx, "Heavy rain fell");
  r.span2 = oracle::locate(ctx, "the river rose");
  if (signal) r.signal = oracle::locate(ctx, "so");
  r.label = label;
  r.direction = label == 1 ? 0 : -1;
  r.split = split;
  return r;
}

TEST(Stats, EmptyCorpus) {
  const auto s = crest::compute_stats({});
  EXPECT_EQ(s, crest::CorpusStats{});
  const std::string table = crest::render_report(s, crest::ReportFormat::table_text);
  EXPECT_NE(table.find("Total 0"), std::string::npos) << table;
}

TEST(Stats, HandCountedFixture) {
  crest::Corpus c;
  // 5 causal (2 with a signal) and 3 non-causal
  for (int i = 0; i < 5; ++i) c.relations.push_back(rel("c" + std::to_string(i), 9, 1, i < 2, i % 3));
  for (int i = 0; i < 3; ++i) c.relations.push_back(rel("n" + std::to_string(i), 2, 0, false, 0));
  const auto s = crest::compute_stats(c);
  EXPECT_EQ(s.causal, 5u);
  EXPECT_EQ(s.non_causal, 3u);
  EXPECT_EQ(s.signal_bearing, 2u);
  EXPECT_EQ(s.total, 8u);
  EXPECT_EQ(s.splits, (std::array<std::size_t, 4>{5, 2, 1, 0}));
  EXPECT_EQ(s.datasets.at(9).causal, 5u);
  EXPECT_EQ(s.datasets.at(2).non_causal, 3u);
  EXPECT_EQ(s.direction_forward, 5u);
  EXPECT_EQ(s.span_length_histogram.at(3), 16u);

  const std::string table = crest::render_report(s, crest::ReportFormat::table_text);
  EXPECT_NE(table.find("\nSource Train Dev Test\n"), std::string::npos) << table;
  EXPECT_NE(table.find("\nSemEval-2010 3 0 0\n"), std::string::npos) << table;
  EXPECT_NE(table.find("\nPDTB3 2 2 1\n"), std::string::npos) << table;

  c.relations[0].split = -1;
  const std::string partial = crest::render_report(crest::compute_stats(c), crest::ReportFormat::table_text);
  EXPECT_NE(partial.find("\nSource Train Dev Test Unassigned\n"), std::string::npos) << partial;
  EXPECT_NE(partial.find("\nSemEval-2010 3 0 0 0\n"), std::string::npos) << partial;
  EXPECT_NE(partial.find("\nPDTB3 1 2 1 1\n"), std::string::npos) << partial;
}

TEST(Stats, SkipsCountedPerDataset) {
  crest::Corpus c;
  c.relations.push_back(rel("a", 9, 1, true, -1));
  std::vector<crest::SkipRecord> skips = {{"x", crest::SkipReason::excluded_sense, "", 9},
                                          {"y", crest::SkipReason::malformed, "", 9}};
  const auto s = crest::compute_stats(c, skips);
  EXPECT_EQ(s.skipped, 2u);
  EXPECT_EQ(s.datasets.at(9).skipped, 2u);
  EXPECT_EQ(s.splits[3], 1u);
}

TEST(Stats, EslSplitRow) {
  crest::Corpus c;
  const std::array<int, 3> sizes{1095, 169, 224};
  int id = 0;
  for (int split = 0; split < 3; ++split) {
    for (int i = 0; i < sizes[split]; ++i) c.relations.push_back(rel(std::to_string(id++), 5, 1, false, split));
  }
  const std::string table = crest::render_report(crest::compute_stats(c), crest::ReportFormat::table_text);
  EXPECT_NE(table.find("\nESL 1,095 169 224\n"), std::string::npos) << table;
}

TEST(Stats, JsonRoundTrip) {
  crest::Corpus c;
  for (const auto& r : gen::causal_relations(50, 4)) c.relations.push_back(r);
  c.relations[3].split = 2;
  c.relations[4].label = 0;
  c.relations[4].direction = -1;
  const auto s = crest::compute_stats(c, std::vector<crest::SkipRecord>{{"z", crest::SkipReason::malformed, "", 5}});
  EXPECT_EQ(crest::stats_from_json(crest::render_report(s, crest::ReportFormat::json)), s);
}

TEST(Stats, InvariantUnderReordering) {
  crest::Corpus c;
  for (const auto& r : gen::causal_relations(200, 8)) c.relations.push_back(r);
  const auto before = crest::compute_stats(c);
  std::mt19937_64 rng(1);
  std::shuffle(c.relations.begin(), c.relations.end(), rng);
  EXPECT_EQ(crest::compute_stats(c), before);
  EXPECT_EQ(before.causal + before.non_causal, before.total);
  EXPECT_EQ(before.splits[0] + before.splits[1] + before.splits[2] + before.splits[3], before.total);
}

TEST(Stats, Thousands) {
  EXPECT_EQ(crest::with_thousands(0), "0");
  EXPECT_EQ(crest::with_thousands(999), "999");
  EXPECT_EQ(crest::with_thousands(7991), "7,991");
  EXPECT_EQ(crest::with_thousands(1234567), "1,234,567");
  for (std::size_t n : {1u, 7u, 33u, 100u, 1000u, 12345u, 100000u, 9876543u}) {
    std::string expected = std::to_string(n);
    for (int pos = static_cast<int>(expected.size()) - 3; pos > 0; pos -= 3) expected.insert(pos, ",");
    EXPECT_EQ(crest::with_thousands(n), expected) << n;
  }
}

}  // namespace
