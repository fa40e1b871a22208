#include <benchmark/benchmark.h>

#include <sstream>

#include "crest/corpus_io.hpp"
#include "crest/relation.hpp"
#include "crest/sequence.hpp"
#include "crest/splitter.hpp"
#include "crest/stats.hpp"
#include "support/generators.hpp"

namespace {

void bm_validate_relation(benchmark::State& state) {
  const auto rels = gen::causal_relations(512, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    auto report = crest::validate_relation(rels[i++ % rels.size()],
                                           crest::Normalization::nfc_collapse_whitespace);
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bm_validate_relation);

void bm_to_sequence(benchmark::State& state) {
  const auto rels = gen::causal_relations(512, 5);
  const crest::MarkerScheme scheme;
  const bool with_direction = state.range(0) != 0;
  std::size_t i = 0;
  for (auto _ : state) {
    auto seq = crest::to_sequence(rels[i++ % rels.size()], scheme, with_direction);
    benchmark::DoNotOptimize(seq);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bm_to_sequence)->Arg(0)->Arg(1);

void bm_lcs(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const auto a = crest::normalize_context(gen::sentence(rng, 40, 60),
                                          crest::ContextNormalization::casefold_collapse_whitespace);
  const auto b = crest::normalize_context(gen::sentence(rng, 40, 60),
                                          crest::ContextNormalization::casefold_collapse_whitespace);
  for (auto _ : state) benchmark::DoNotOptimize(crest::longest_common_substring(a, b));
}
BENCHMARK(bm_lcs);

void bm_partition(benchmark::State& state) {
  const auto planted = gen::planted_corpus(static_cast<std::size_t>(state.range(0)), 17);
  crest::OverlapPolicy policy;
  policy.mode = static_cast<crest::OverlapMode>(state.range(1));
  for (auto _ : state) {
    auto partition = crest::build_overlap_partition(planted.corpus, policy);
    benchmark::DoNotOptimize(partition);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_partition)
    ->ArgsProduct({{250, 1000}, {0, 1, 2}})
    ->Unit(benchmark::kMillisecond);

void bm_assign_splits(benchmark::State& state) {
  const auto planted = gen::planted_corpus(static_cast<std::size_t>(state.range(0)), 19);
  const crest::OverlapPolicy policy;
  const auto partition = crest::build_overlap_partition(planted.corpus, policy);
  crest::SplitConfig config;
  config.seed = 7;
  for (auto _ : state) {
    auto result = crest::assign_splits(planted.corpus, partition, config);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(bm_assign_splits)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void bm_corpus_round_trip(benchmark::State& state) {
  crest::Corpus corpus;
  corpus.relations = gen::causal_relations(1000, 23);
  for (std::size_t i = 0; i < corpus.relations.size(); ++i) corpus.relations[i].original_id = "r" + std::to_string(i);
  for (auto _ : state) {
    std::stringstream buf;
    crest::write_corpus(corpus, buf);
    auto back = crest::read_corpus(buf);
    benchmark::DoNotOptimize(back);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.relations.size()));
}
BENCHMARK(bm_corpus_round_trip)->Unit(benchmark::kMillisecond);

void bm_stats(benchmark::State& state) {
  const auto planted = gen::planted_corpus(2000, 29);
  for (auto _ : state) {
    auto stats = crest::compute_stats(planted.corpus);
    benchmark::DoNotOptimize(stats);
  }
}
BENCHMARK(bm_stats)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
