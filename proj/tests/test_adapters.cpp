#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <map>

#include "crest/adapters.hpp"
#include "crest/corpus_io.hpp"
#include "crest/error.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

namespace fs = std::filesystem;
using crest::SkipReason;

const crest::CrestRelation* by_id(const crest::ParseResult& r, const std::string& id) {
  for (const auto& rel : r.relations) {
    if (rel.original_id == id) return &rel;
  }
  return nullptr;
}

std::map<SkipReason, std::size_t> reasons(const crest::ParseResult& r) {
  std::map<SkipReason, std::size_t> m;
  for (const auto& s : r.skips) ++m[s.reason];
  return m;
}

// --- in-memory grammar examples ------------------------------------------

TEST(SemEval, CowMilk2010) {
  const auto r = crest::parse_semeval(
      "8\t\"The <e1>cow</e1> produced the <e2>milk</e2>.\"\nCause-Effect(e1,e2)\nComment:\n", "d",
      crest::SemEvalTask::y2010);
  ASSERT_EQ(r.relations.size(), 1u);
  const auto& rel = r.relations[0];
  const std::string ctx = "The cow produced the milk.";
  EXPECT_EQ(rel.original_id, "d:8");
  EXPECT_EQ(rel.context, ctx);
  EXPECT_EQ(rel.span1, oracle::locate(ctx, "cow"));
  EXPECT_EQ(rel.span2, oracle::locate(ctx, "milk"));
  EXPECT_EQ(rel.span1.offsets[0], (crest::Range{4, 7}));
  EXPECT_EQ(rel.span2.offsets[0], (crest::Range{21, 25}));
  EXPECT_EQ(rel.label, 1);
  EXPECT_EQ(rel.direction, 0);
  EXPECT_TRUE(rel.signal.empty());
}

TEST(SemEval, NonCausalAndReversed2010) {
  const auto r = crest::parse_semeval(
      "1\t\"The <e1>cow</e1> produced the <e2>milk</e2>.\"\nComponent-Whole(e1,e2)\n\n"
      "2\t\"The <e1>cow</e1> produced the <e2>milk</e2>.\"\nCause-Effect(e2,e1)\n",
      "d", crest::SemEvalTask::y2010);
  ASSERT_EQ(r.relations.size(), 2u);
  EXPECT_EQ(r.relations[0].label, 0);
  EXPECT_EQ(r.relations[0].direction, -1);
  EXPECT_EQ(r.relations[1].label, 1);
  EXPECT_EQ(r.relations[1].direction, 1);
}

TEST(SemEval, MissingClosingTagIsMalformed) {
  const auto r = crest::parse_semeval("3\t\"The <e1>cow produced the <e2>milk</e2>.\"\nOther\n", "d",
                                      crest::SemEvalTask::y2010);
  EXPECT_TRUE(r.relations.empty());
  ASSERT_EQ(r.skips.size(), 1u);
  EXPECT_EQ(r.skips[0].reason, SkipReason::malformed);
  EXPECT_EQ(r.candidates, 1u);
}

TEST(SemEval, NestedTagsAreMalformed) {
  const auto r = crest::parse_semeval("3\t\"<e1>The <e2>cow</e2></e1> ate.\"\nOther\n", "d",
                                      crest::SemEvalTask::y2010);
  ASSERT_EQ(r.skips.size(), 1u);
  EXPECT_EQ(r.skips[0].reason, SkipReason::malformed);
}

TEST(SemEval, Task2007TruthValue) {
  const auto r = crest::parse_semeval(
      "1\t\"The <e1>cow</e1> produced the <e2>milk</e2>.\"\n"
      "WordNet(e1) = \"x\", Cause-Effect(e2,e1) = \"true\", Query = \"q\"\n"
      "2\t\"The <e1>cow</e1> produced the <e2>milk</e2>.\"\n"
      "WordNet(e1) = \"x\", Cause-Effect(e1,e2) = \"false\", Query = \"q\"\n",
      "d", crest::SemEvalTask::y2007);
  ASSERT_EQ(r.relations.size(), 2u);
  EXPECT_EQ(r.relations[0].direction, 1);
  EXPECT_EQ(r.relations[1].label, 0);
}

TEST(Copa, EffectItem) {
  const auto r = crest::parse_copa(
      R"(<copa-corpus><item id="7" asks-for="effect" most-plausible-alternative="1">)"
      R"(<p>P happened.</p><a1>A followed.</a1><a2>B followed.</a2></item></copa-corpus>)",
      "copa");
  ASSERT_EQ(r.relations.size(), 2u);
  const auto* causal = by_id(r, "copa:7:a1");
  const auto* other = by_id(r, "copa:7:a2");
  ASSERT_TRUE(causal && other);
  EXPECT_EQ(causal->context, "P happened. A followed.");
  EXPECT_EQ(causal->span1, oracle::locate(causal->context, "P happened."));
  EXPECT_EQ(causal->span2, oracle::locate(causal->context, "A followed."));
  EXPECT_EQ(causal->label, 1);
  EXPECT_EQ(causal->direction, 0);
  EXPECT_EQ(other->label, 0);
  EXPECT_EQ(other->direction, -1);
}

TEST(Copa, CauseItemGetsDirectionOne) {
  const auto r = crest::parse_copa(
      R"(<copa-corpus><item id="1" asks-for="cause" most-plausible-alternative="2">)"
      R"(<p>P.</p><a1>A.</a1><a2>B.</a2></item></copa-corpus>)",
      "copa");
  const auto* causal = by_id(r, "copa:1:a2");
  ASSERT_NE(causal, nullptr);
  EXPECT_EQ(causal->label, 1);
  EXPECT_EQ(causal->direction, 1);
}

TEST(Copa, ThousandItemsGiveThousandCausal) {
  std::string xml = "<copa-corpus>";
  for (int i = 1; i <= 1000; ++i) {
    xml += "<item id=\"" + std::to_string(i) + "\" asks-for=\"" + (i % 2 ? "cause" : "effect") +
           "\" most-plausible-alternative=\"" + std::to_string(1 + i % 2) +
           "\"><p>Premise " + std::to_string(i) + ".</p><a1>First.</a1><a2>Second.</a2></item>";
  }
  xml += "</copa-corpus>";
  const auto r = crest::parse_copa(xml, "copa");
  const auto causal = std::count_if(r.relations.begin(), r.relations.end(),
                                    [](const auto& rel) { return rel.label == 1; });
  EXPECT_EQ(causal, 1000);
  EXPECT_EQ(r.relations.size(), 2000u);
}

TEST(Pdtb3, SenseMapping) {
  const std::string raw = "Demand collapsed. As a result, prices fell.";
  auto rec = [&](std::string type, std::string conn, std::string sense) {
    std::vector<std::string> f(33);
    f[0] = type;
    f[1] = conn;
    f[8] = sense;
    f[14] = "0..16";
    f[20] = "31..42";
    std::string line;
    for (std::size_t i = 0; i < f.size(); ++i) line += (i ? "|" : "") + f[i];
    return line + "\n";
  };
  const auto r = crest::parse_pdtb3(rec("Explicit", "18..29", "Contingency.Cause.Result") +
                                        rec("Explicit", "18..29", "Contingency.Cause.NegResult") +
                                        rec("Explicit", "18..29", "Expansion.Conjunction") +
                                        rec("Explicit", "18..29", "Contingency.Cause+Belief.Reason+Belief"),
                                    raw, "wsj");
  ASSERT_EQ(r.relations.size(), 2u);
  EXPECT_EQ(r.relations[0].signal.tokens, (std::vector<std::string>{"As", "a", "result"}));
  EXPECT_EQ(r.relations[0].direction, 0);
  EXPECT_EQ(r.relations[1].direction, 1);
  ASSERT_EQ(r.skips.size(), 2u);
  EXPECT_EQ(r.skips[0].reason, SkipReason::excluded_sense);
  EXPECT_EQ(r.skips[1].reason, SkipReason::excluded_sense);
}

TEST(Because, RoleMapping) {
  const std::string txt = "The vote was delayed because the senator fell ill.";
  const std::string ann =
      "T1\tEffect 0 20\tThe vote was delayed\n"
      "T2\tCause 29 49\tthe senator fell ill\n"
      "T3\tConsequence 21 28\tbecause\n"
      "E1\tConsequence:T3 Cause:T2 Effect:T1\n";
  const auto r = crest::parse_because(ann, txt, "nyt");
  ASSERT_EQ(r.relations.size(), 1u);
  const auto& rel = r.relations[0];
  EXPECT_EQ(rel.span1, oracle::locate(txt, "The vote was delayed"));
  EXPECT_EQ(rel.span2, oracle::locate(txt, "the senator fell ill"));
  EXPECT_EQ(rel.direction, 1);
  EXPECT_EQ(rel.signal, oracle::locate(txt, "because"));
}

TEST(Because, EmptyTriggerAndMisalignedOffsetsAreMalformed) {
  const std::string txt = "Rain fell so the roads flooded.";
  const std::string ann =
      "T1\tCause 0 9\tRain fell\n"
      "T2\tEffect 13 30\tthe roads flooded\n"
      "T3\tConsequence 10 12\tso\n"
      "T4\tCause 1 10\tRain fell\n"
      "E1\tConsequence Cause:T1 Effect:T2\n"
      "E2\tConsequence:T3 Cause:T4 Effect:T2\n";
  const auto r = crest::parse_because(ann, txt, "d");
  EXPECT_TRUE(r.relations.empty());
  EXPECT_EQ(reasons(r)[SkipReason::malformed], 2u);
}

TEST(EventStoryLine, PreconditionAndFallingActionAgree) {
  const std::string xml =
      R"(<Document><token t_id="1" sentence="0">Quake</token><token t_id="2" sentence="0">struck</token>)"
      R"(<token t_id="3" sentence="0">,</token><token t_id="4" sentence="0">knocking</token>)"
      R"(<token t_id="5" sentence="0">walls</token><Markables>)"
      R"(<ACTION_OCCURRENCE m_id="a"><token_anchor t_id="2"/></ACTION_OCCURRENCE>)"
      R"(<ACTION_OCCURRENCE m_id="b"><token_anchor t_id="4"/></ACTION_OCCURRENCE></Markables>)"
      R"(<Relations><PLOT_LINK r_id="p" relType="PRECONDITION"><source m_id="a"/><target m_id="b"/></PLOT_LINK>)"
      R"(<PLOT_LINK r_id="f" relType="FALLING_ACTION"><source m_id="b"/><target m_id="a"/></PLOT_LINK>)"
      R"(<PLOT_LINK r_id="x" relType="WHATEVER"><source m_id="b"/><target m_id="a"/></PLOT_LINK></Relations></Document>)";
  const auto r = crest::parse_eventstoryline(xml, "esl");
  ASSERT_EQ(r.relations.size(), 2u);
  auto cause_effect = [](const crest::CrestRelation& rel) {
    const auto& cause = rel.direction == 0 ? rel.span1 : rel.span2;
    const auto& effect = rel.direction == 0 ? rel.span2 : rel.span1;
    return std::make_pair(cause.tokens, effect.tokens);
  };
  EXPECT_EQ(r.relations[0].direction, 0);
  EXPECT_EQ(r.relations[1].direction, 1);
  EXPECT_EQ(r.relations[1].span1.tokens, std::vector<std::string>{"knocking"});
  EXPECT_EQ(cause_effect(r.relations[0]), cause_effect(r.relations[1]));
  ASSERT_EQ(r.skips.size(), 1u);
  EXPECT_EQ(r.skips[0].reason, SkipReason::excluded_relation_type);
}

// --- registry over the shipped fixtures -----------------------------------

TEST(Registry, LookupAndUnknownIds) {
  EXPECT_EQ(crest::adapter_registry().size(), 9u);
  for (int id = 1; id <= 9; ++id) {
    EXPECT_EQ(crest::adapter_by_id(id).dataset_id, id);
    EXPECT_EQ(crest::adapter_by_name(crest::adapter_by_id(id).name).dataset_id, id);
  }
  EXPECT_THROW(crest::adapter_by_id(10), crest::ConfigError);
  EXPECT_THROW(crest::adapter_by_name("semeval2012"), crest::ConfigError);
  EXPECT_EQ(crest::dataset_display_name(5), "ESL");
}

class FixtureSuite : public ::testing::TestWithParam<fixtures::Case> {};

TEST_P(FixtureSuite, ConservationValidityAndSignals) {
  const auto& c = GetParam();
  const auto& spec = crest::adapter_by_name(c.adapter);
  const auto files = fixtures::files(c);
  const auto r = crest::parse_with_adapter(spec, files);

  EXPECT_EQ(r.candidates, fixtures::count_candidates(c));
  EXPECT_EQ(r.relations.size() + r.skips.size(), r.candidates);
  EXPECT_EQ(r.relations.size(), c.relations);
  EXPECT_EQ(reasons(r), c.skips);

  for (const auto& rel : r.relations) {
    EXPECT_EQ(rel.dataset_id, spec.dataset_id);
    EXPECT_TRUE(crest::validate_relation(rel, crest::Normalization::nfc_collapse_whitespace).empty())
        << rel.original_id;
    if (!spec.has_signal) {
      EXPECT_TRUE(rel.signal.empty()) << rel.original_id;
    }
  }
  for (const auto& s : r.skips) EXPECT_EQ(s.dataset_id, spec.dataset_id);
  EXPECT_EQ(r.relations.size() - std::count_if(r.relations.begin(), r.relations.end(),
                                                [](const auto& x) { return x.signal.empty(); }),
            c.with_signal);

  const auto again = crest::parse_with_adapter(spec, files);
  EXPECT_EQ(again.relations, r.relations);
  EXPECT_EQ(again.skips, r.skips);
}

INSTANTIATE_TEST_SUITE_P(AllNine, FixtureSuite, ::testing::ValuesIn(fixtures::cases()),
                         [](const auto& info) {
                           std::string n = info.param.adapter;
                           std::replace(n.begin(), n.end(), '-', '_');
                           return n;
                         });

TEST(Registry, EventStoryLineFixtureExample) {
  const auto r = crest::parse_with_adapter(crest::adapter_by_name("eventstoryline"),
                                           fixtures::files(fixtures::find("eventstoryline")));
  const auto* pre = by_id(r, "1_1ecbplus.xml:r1");
  const auto* fall = by_id(r, "1_1ecbplus.xml:r2");
  ASSERT_TRUE(pre && fall);
  EXPECT_EQ(pre->span1.tokens, std::vector<std::string>{"struck"});
  EXPECT_EQ(pre->span2.tokens, std::vector<std::string>{"knocking"});
  EXPECT_EQ(pre->direction, 0);
  EXPECT_EQ(fall->span1.tokens, std::vector<std::string>{"knocking"});
  EXPECT_EQ(fall->direction, 1);
  EXPECT_EQ(pre->context, fall->context);
  const auto* signalled = by_id(r, "1_1ecbplus.xml:r4");
  ASSERT_NE(signalled, nullptr);
  EXPECT_EQ(signalled->signal.tokens, std::vector<std::string>{"after"});
}

TEST(Registry, CausalTimeBankSignal) {
  const auto r = crest::parse_with_adapter(crest::adapter_by_name("causal-timebank"),
                                           fixtures::files(fixtures::find("causal-timebank")));
  const auto* rel = by_id(r, "wsj_0126:l2");
  ASSERT_NE(rel, nullptr);
  EXPECT_EQ(rel->signal.tokens, (std::vector<std::string>{"because", "of"}));
  EXPECT_EQ(rel->span1.tokens, std::vector<std::string>{"recall"});
  EXPECT_EQ(rel->span2.tokens, std::vector<std::string>{"fell"});
  EXPECT_EQ(rel->direction, 0);
  EXPECT_EQ(rel->context, "Shares of the company fell sharply because of the recall.");
}

TEST(Registry, Pdtb3Fixture) {
  const auto r = crest::parse_with_adapter(crest::adapter_by_name("pdtb3"),
                                           fixtures::files(fixtures::find("pdtb3")));
  const auto* result = by_id(r, "wsj_0003:1");
  ASSERT_NE(result, nullptr);
  EXPECT_EQ(result->signal.tokens, (std::vector<std::string>{"As", "a", "result"}));
  EXPECT_EQ(result->direction, 0);
  const auto* reason = by_id(r, "wsj_0003:2");
  ASSERT_NE(reason, nullptr);
  EXPECT_EQ(reason->direction, 1);
  EXPECT_EQ(reason->signal.tokens, std::vector<std::string>{"because"});
  const auto* implicit = by_id(r, "wsj_0003:5");
  ASSERT_NE(implicit, nullptr);
  EXPECT_TRUE(implicit->signal.empty());
  const auto neg = std::find_if(r.skips.begin(), r.skips.end(),
                                [](const auto& s) { return s.original_id == "wsj_0003:4"; });
  ASSERT_NE(neg, r.skips.end());
  EXPECT_EQ(neg->reason, SkipReason::excluded_sense);
}

TEST(Registry, EmptySourcesYieldNothing) {
  const auto dir = fs::temp_directory_path() / "crest_empty_sources";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::map<std::string, std::string> name = {
      {"semeval2007", "a.txt"}, {"semeval2010", "a.txt"},  {"eventcausality", "a.ann"},
      {"causal-timebank", "a.tml"}, {"eventstoryline", "a.xml"}, {"caters", "a.ann"},
      {"because", "a.ann"},     {"copa", "a.xml"},          {"pdtb3", "a"}};
  for (const auto& spec : crest::adapter_registry()) {
    const auto path = dir / spec.name / name.at(spec.name);
    crest::write_file(path, "");
    const auto r = crest::parse_with_adapter(spec, {path});
    EXPECT_EQ(r.relations.size(), 0u) << spec.name;
    EXPECT_EQ(r.skips.size(), 0u) << spec.name;
    EXPECT_EQ(r.candidates, 0u) << spec.name;
  }
  fs::remove_all(dir);
}

TEST(Registry, StandoffWithoutTextIsMissingText) {
  const auto dir = fs::temp_directory_path() / "crest_missing_txt";
  fs::remove_all(dir);
  crest::write_file(dir / "doc.ann", "T1\tEvent 0 3\tabc\nT2\tEvent 4 7\tdef\nR1\tC Arg1:T1 Arg2:T2\n");
  const auto r = crest::parse_with_adapter(crest::adapter_by_name("eventcausality"), {dir / "doc.ann"});
  ASSERT_EQ(r.skips.size(), 1u);
  EXPECT_EQ(r.skips[0].reason, SkipReason::missing_text);
  fs::remove_all(dir);
}

TEST(Registry, SkipJsonRoundTrip) {
  crest::SkipRecord s{"wsj_0003:4", SkipReason::excluded_sense, "NegResult sense", 9};
  EXPECT_EQ(crest::skip_to_json(s),
            R"({"original_id":"wsj_0003:4","dataset_id":9,"reason":"EXCLUDED_SENSE","detail":"NegResult sense"})");
  EXPECT_EQ(crest::skip_from_json(crest::skip_to_json(s)), s);
  EXPECT_THROW(crest::skip_from_json(R"({"original_id":"x","reason":"NOPE"})"), crest::DataError);
}

}  // namespace
