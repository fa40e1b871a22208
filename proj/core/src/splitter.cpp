#include "crest/splitter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <optional>
#include <tuple>
#include <random>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "crest/error.hpp"

namespace crest {
namespace {

constexpr std::size_t kContainmentGram = 8;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // smallest index stays the root
  }

 private:
  std::vector<std::size_t> parent_;
};

// Uniform integer in [0, bound) from a 64-bit engine, by rejection. Written
// out so results do not depend on the standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <typename T>
void seeded_shuffle(std::vector<T>& items, std::size_t first, std::size_t last,
                    std::mt19937_64& rng) {
  for (std::size_t i = last; i > first + 1; --i) {
    const std::size_t j = first + uniform_below(rng, i - first);
    std::swap(items[i - 1], items[j]);
  }
}

bool contains(std::u32string_view hay, std::u32string_view needle) {
  return hay.size() >= needle.size() && hay.find(needle) != std::u32string_view::npos;
}

struct UniqueContexts {
  std::vector<std::u32string> texts;
  std::vector<std::size_t> of_relation;  // relation index -> unique id
};

UniqueContexts dedupe(const std::vector<std::string>& contexts, ContextNormalization norm) {
  UniqueContexts u;
  std::unordered_map<std::u32string, std::size_t> ids;
  u.of_relation.reserve(contexts.size());
  for (const auto& c : contexts) {
    auto normalized = normalize_context(c, norm);
    auto [it, inserted] = ids.emplace(std::move(normalized), u.texts.size());
    if (inserted) u.texts.push_back(it->first);
    u.of_relation.push_back(it->second);
  }
  return u;
}

void unite_containment(const std::vector<std::u32string>& texts, DisjointSets& sets) {
  std::unordered_map<std::u32string_view, std::vector<std::size_t>> by_gram;
  for (std::size_t id = 0; id < texts.size(); ++id) {
    const std::u32string_view t = texts[id];
    if (t.size() < kContainmentGram) continue;
    std::unordered_set<std::u32string_view> local;
    for (std::size_t p = 0; p + kContainmentGram <= t.size(); ++p) {
      const auto gram = t.substr(p, kContainmentGram);
      if (local.insert(gram).second) by_gram[gram].push_back(id);
    }
  }
  for (std::size_t id = 0; id < texts.size(); ++id) {
    const std::u32string_view t = texts[id];
    if (t.size() >= kContainmentGram) {
      auto it = by_gram.find(t.substr(0, kContainmentGram));
      if (it == by_gram.end()) continue;
      for (std::size_t other : it->second) {
        if (other != id && contains(texts[other], t)) sets.unite(id, other);
      }
    } else {
      for (std::size_t other = 0; other < texts.size(); ++other) {
        if (other != id && contains(texts[other], t)) sets.unite(id, other);
      }
    }
  }
}

void unite_shared_windows(const std::vector<std::u32string>& texts, std::size_t k,
                          DisjointSets& sets) {
  std::unordered_map<std::u32string_view, std::size_t> owner;
  for (std::size_t id = 0; id < texts.size(); ++id) {
    const std::u32string_view t = texts[id];
    for (std::size_t p = 0; p + k <= t.size(); ++p) {
      auto [it, inserted] = owner.emplace(t.substr(p, k), id);
      if (!inserted) sets.unite(it->second, id);
    }
  }
}

std::vector<std::string> contexts_of(const Corpus& corpus) {
  std::vector<std::string> out;
  out.reserve(corpus.relations.size());
  for (const auto& rel : corpus.relations) out.push_back(rel.context);
  return out;
}

}  // namespace

std::string_view context_normalization_name(ContextNormalization n) {
  return n == ContextNormalization::exact ? "exact" : "casefold+collapse-whitespace";
}

ContextNormalization parse_context_normalization(std::string_view name) {
  if (name == "exact") return ContextNormalization::exact;
  if (name == "casefold+collapse-whitespace") return ContextNormalization::casefold_collapse_whitespace;
  throw ConfigError("unknown context normalization: " + std::string(name));
}

std::string_view overlap_mode_name(OverlapMode m) {
  switch (m) {
    case OverlapMode::equality: return "equality";
    case OverlapMode::containment: return "containment";
    case OverlapMode::shared_substring: return "shared-substring";
  }
  return "containment";
}

OverlapMode parse_overlap_mode(std::string_view name) {
  if (name == "equality") return OverlapMode::equality;
  if (name == "containment") return OverlapMode::containment;
  if (name == "shared-substring") return OverlapMode::shared_substring;
  throw ConfigError("unknown overlap mode: " + std::string(name));
}

void OverlapPolicy::check() const {
  if (min_shared_chars < 1) throw ConfigError("min_shared_chars must be >= 1");
}

std::u32string normalize_context(std::string_view context, ContextNormalization n) {
  if (n == ContextNormalization::exact) return text::to_u32(context);
  return text::to_u32(text::collapse_whitespace(text::casefold(context)));
}

int SubstringIndex::State::go(char32_t c) const {
  auto it = std::lower_bound(next.begin(), next.end(), c,
                             [](const auto& e, char32_t v) { return e.first < v; });
  return it != next.end() && it->first == c ? it->second : -1;
}

SubstringIndex::SubstringIndex(std::u32string_view text) {
  states_.reserve(2 * text.size() + 1);
  states_.push_back({});
  int last = 0;
  auto set_next = [this](int state, char32_t c, int target) {
    auto& nx = states_[static_cast<std::size_t>(state)].next;
    auto it = std::lower_bound(nx.begin(), nx.end(), c,
                               [](const auto& e, char32_t v) { return e.first < v; });
    if (it != nx.end() && it->first == c) {
      it->second = target;
    } else {
      nx.insert(it, {c, target});
    }
  };
  for (char32_t c : text) {
    const int cur = static_cast<int>(states_.size());
    states_.push_back({states_[static_cast<std::size_t>(last)].len + 1, -1, {}});
    int p = last;
    while (p != -1 && states_[static_cast<std::size_t>(p)].go(c) == -1) {
      set_next(p, c, cur);
      p = states_[static_cast<std::size_t>(p)].link;
    }
    if (p == -1) {
      states_[static_cast<std::size_t>(cur)].link = 0;
    } else {
      const int q = states_[static_cast<std::size_t>(p)].go(c);
      if (states_[static_cast<std::size_t>(p)].len + 1 == states_[static_cast<std::size_t>(q)].len) {
        states_[static_cast<std::size_t>(cur)].link = q;
      } else {
        const int clone = static_cast<int>(states_.size());
        State copy = states_[static_cast<std::size_t>(q)];
        copy.len = states_[static_cast<std::size_t>(p)].len + 1;
        states_.push_back(std::move(copy));
        while (p != -1 && states_[static_cast<std::size_t>(p)].go(c) == q) {
          set_next(p, c, clone);
          p = states_[static_cast<std::size_t>(p)].link;
        }
        states_[static_cast<std::size_t>(q)].link = clone;
        states_[static_cast<std::size_t>(cur)].link = clone;
      }
    }
    last = cur;
  }
}

std::size_t SubstringIndex::longest_common(std::u32string_view other) const {
  int state = 0;
  std::size_t len = 0;
  std::size_t best = 0;
  for (char32_t c : other) {
    while (state != 0 && states_[static_cast<std::size_t>(state)].go(c) == -1) {
      state = states_[static_cast<std::size_t>(state)].link;
      len = states_[static_cast<std::size_t>(state)].len;
    }
    const int nx = states_[static_cast<std::size_t>(state)].go(c);
    if (nx != -1) {
      state = nx;
      ++len;
    } else {
      state = 0;
      len = 0;
    }
    best = std::max(best, len);
  }
  return best;
}

std::size_t longest_common_substring(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  return SubstringIndex(b).longest_common(a);
}

bool normalized_overlap(std::u32string_view a, std::u32string_view b,
                        const OverlapPolicy& policy) {
  if (a == b) return true;
  if (policy.mode == OverlapMode::equality) return false;
  if (contains(a, b) || contains(b, a)) return true;
  if (policy.mode == OverlapMode::containment) return false;
  return longest_common_substring(a, b) >= policy.min_shared_chars;
}

bool context_overlap(std::string_view a, std::string_view b, const OverlapPolicy& policy) {
  policy.check();
  return normalized_overlap(normalize_context(a, policy.normalization),
                            normalize_context(b, policy.normalization), policy);
}

std::size_t OverlapPartition::max_group_size() const {
  std::size_t m = 0;
  for (const auto& g : groups) m = std::max(m, g.size());
  return m;
}

OverlapPartition build_overlap_partition(const Corpus& corpus, const OverlapPolicy& policy) {
  return build_overlap_partition(contexts_of(corpus), policy);
}

OverlapPartition build_overlap_partition(const std::vector<std::string>& contexts,
                                         const OverlapPolicy& policy) {
  policy.check();
  const UniqueContexts unique = dedupe(contexts, policy.normalization);

  DisjointSets sets(unique.texts.size());
  if (policy.mode != OverlapMode::equality) unite_containment(unique.texts, sets);
  if (policy.mode == OverlapMode::shared_substring) {
    unite_shared_windows(unique.texts, policy.min_shared_chars, sets);
  }

  // Unique ids are numbered in first-occurrence order, so the root (smallest
  // unique id) of each set maps to the group's smallest relation index.
  OverlapPartition partition;
  partition.policy = policy;
  std::unordered_map<std::size_t, std::size_t> group_of_root;
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    const std::size_t root = sets.find(unique.of_relation[i]);
    auto [it, inserted] = group_of_root.emplace(root, partition.groups.size());
    if (inserted) partition.groups.emplace_back();
    partition.groups[it->second].push_back(i);
  }
  return partition;
}

void SplitConfig::check() const {
  double sum = 0.0;
  for (double r : ratios) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw ConfigError("split ratios must be non-negative");
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ConfigError("split ratios must sum to 1 (got " + std::to_string(sum) + ")");
  }
}

AuditResult audit_splits(const Corpus& corpus, const OverlapPolicy& policy) {
  policy.check();
  const auto& rels = corpus.relations;

  // Collapse identical normalized contexts; a context that occurs in two
  // different splits is a leak on its own.
  struct Entry {
    std::u32string text;
    std::map<int, std::size_t> first_in_split;  // split -> first relation index
  };
  std::vector<Entry> entries;
  std::unordered_map<std::u32string, std::size_t> ids;
  AuditResult result;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (rels[i].split < 0) continue;
    auto text = normalize_context(rels[i].context, policy.normalization);
    auto [it, inserted] = ids.emplace(text, entries.size());
    if (inserted) entries.push_back({std::move(text), {}});
    entries[it->second].first_in_split.emplace(rels[i].split, i);
  }
  for (const auto& e : entries) {
    if (e.first_in_split.size() > 1) {
      auto it = e.first_in_split.begin();
      result.leaks.push_back({it->second, std::next(it)->second});
    }
  }

  const std::size_t n = entries.size();
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
  std::vector<std::vector<OverlapPair>> found(workers);
  std::vector<std::size_t> checked(workers, 0);
  auto scan_rows = [&](unsigned w) {
    for (std::size_t i = w; i < n; i += workers) {
      const bool need_lcs = policy.mode == OverlapMode::shared_substring;
      std::optional<SubstringIndex> index;
      if (need_lcs) index.emplace(entries[i].text);
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto& a = entries[i];
        const auto& b = entries[j];
        // Only pairs that span two different splits matter.
        bool cross = false;
        for (const auto& [sa, ia] : a.first_in_split) {
          for (const auto& [sb, ib] : b.first_in_split) {
            if (sa != sb) cross = true;
          }
        }
        if (!cross) continue;
        ++checked[w];
        bool overlap = false;
        if (policy.mode != OverlapMode::equality) {
          overlap = contains(a.text, b.text) || contains(b.text, a.text);
          if (!overlap && need_lcs) {
            overlap = index->longest_common(b.text) >= policy.min_shared_chars;
          }
        }
        if (!overlap) continue;
        for (const auto& [sa, ia] : a.first_in_split) {
          for (const auto& [sb, ib] : b.first_in_split) {
            if (sa != sb) found[w].push_back({std::min(ia, ib), std::max(ia, ib)});
          }
        }
      }
    }
  };
  if (workers == 1) {
    scan_rows(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan_rows, w);
  }
  for (unsigned w = 0; w < workers; ++w) {
    result.pairs_checked += checked[w];
    result.leaks.insert(result.leaks.end(), found[w].begin(), found[w].end());
  }
  std::sort(result.leaks.begin(), result.leaks.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });
  result.passed = result.leaks.empty();
  return result;
}

SplitResult assign_splits(const Corpus& corpus, const OverlapPartition& partition,
                          const SplitConfig& config) {
  config.check();
  const std::size_t n = corpus.relations.size();

  std::vector<char> covered(n, 0);
  for (const auto& g : partition.groups) {
    if (g.empty()) throw DataError("BAD_PARTITION", "partition contains an empty group");
    for (std::size_t i : g) {
      if (i >= n || covered[i]) {
        throw DataError("BAD_PARTITION", "partition groups are not a partition of the corpus");
      }
      covered[i] = 1;
    }
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
    throw DataError("BAD_PARTITION", "partition does not cover the corpus");
  }

  std::vector<std::size_t> order(partition.groups.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ga = partition.groups[a];
    const auto& gb = partition.groups[b];
    if (ga.size() != gb.size()) return ga.size() > gb.size();
    return ga.front() < gb.front();
  });
  std::mt19937_64 rng(config.seed);
  for (std::size_t first = 0; first < order.size();) {
    std::size_t last = first + 1;
    const std::size_t size = partition.groups[order[first]].size();
    while (last < order.size() && partition.groups[order[last]].size() == size) ++last;
    seeded_shuffle(order, first, last, rng);
    first = last;
  }

  SplitResult result{corpus, {}};
  auto& report = result.report;
  std::array<double, 3> deficit{};
  for (std::size_t s = 0; s < 3; ++s) {
    deficit[s] = config.ratios[s] * static_cast<double>(n);
  }
  for (std::size_t gi : order) {
    const auto& group = partition.groups[gi];
    std::size_t best = 0;
    for (std::size_t s = 1; s < 3; ++s) {
      if (deficit[s] > deficit[best] + 1e-9) best = s;
    }
    for (std::size_t i : group) result.corpus.relations[i].split = static_cast<int>(best);
    deficit[best] -= static_cast<double>(group.size());
    report.counts[best] += group.size();
  }

  report.relation_count = n;
  report.group_count = partition.groups.size();
  report.max_group_size = partition.max_group_size();
  for (const auto& g : partition.groups) report.group_sizes.push_back(g.size());
  report.target_ratios = config.ratios;
  for (std::size_t s = 0; s < 3; ++s) {
    report.achieved_ratios[s] =
        n == 0 ? 0.0 : static_cast<double>(report.counts[s]) / static_cast<double>(n);
  }
  report.seed = config.seed;
  report.policy = partition.policy;
  report.audit = audit_splits(result.corpus, partition.policy);
  if (!report.audit.passed) {
    const auto& leak = report.audit.leaks.front();
    throw DataError("AUDIT_FAILED",
                    "split audit found " + std::to_string(report.audit.leaks.size()) +
                        " overlapping cross-split pairs (first: relations " +
                        std::to_string(leak.first) + " and " + std::to_string(leak.second) + ")");
  }
  return result;
}

std::string split_report_to_json(const SplitReport& report) {
  nlohmann::ordered_json j;
  j["relations"] = report.relation_count;
  j["group_count"] = report.group_count;
  j["max_group_size"] = report.max_group_size;
  j["group_sizes"] = report.group_sizes;
  j["policy"] = {
      {"normalization", std::string(context_normalization_name(report.policy.normalization))},
      {"mode", std::string(overlap_mode_name(report.policy.mode))},
      {"min_shared_chars", report.policy.min_shared_chars},
  };
  j["seed"] = report.seed;
  nlohmann::ordered_json counts, target, achieved;
  for (std::size_t s = 0; s < 3; ++s) {
    const std::string name(split_name(static_cast<Split>(s)));
    counts[name] = report.counts[s];
    target[name] = report.target_ratios[s];
    achieved[name] = report.achieved_ratios[s];
  }
  j["counts"] = counts;
  j["target_ratios"] = target;
  j["achieved_ratios"] = achieved;
  nlohmann::ordered_json leaks = nlohmann::ordered_json::array();
  for (const auto& l : report.audit.leaks) leaks.push_back({l.first, l.second});
  j["audit"] = {
      {"passed", report.audit.passed},
      {"pairs_checked", report.audit.pairs_checked},
      {"leaks", leaks},
  };
  return j.dump(2) + "\n";
}

}  // namespace crest
