#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "crest/relation.hpp"

namespace crest {

enum class ContextNormalization { exact, casefold_collapse_whitespace };
enum class OverlapMode { equality, containment, shared_substring };

std::string_view context_normalization_name(ContextNormalization n);
ContextNormalization parse_context_normalization(std::string_view name);
std::string_view overlap_mode_name(OverlapMode m);
OverlapMode parse_overlap_mode(std::string_view name);

// When two contexts count as overlapping. Each mode includes the ones before
// it: containment also catches equal strings, shared-substring also catches
// containment.
struct OverlapPolicy {
  ContextNormalization normalization = ContextNormalization::casefold_collapse_whitespace;
  OverlapMode mode = OverlapMode::containment;
  std::size_t min_shared_chars = 50;

  void check() const;

  friend bool operator==(const OverlapPolicy&, const OverlapPolicy&) = default;
};

std::u32string normalize_context(std::string_view context, ContextNormalization n);

// Suffix automaton over one string; answers "longest substring shared with
// another string" in time linear in the other string.
class SubstringIndex {
 public:
  explicit SubstringIndex(std::u32string_view text);

  std::size_t longest_common(std::u32string_view other) const;

 private:
  struct State {
    std::size_t len = 0;
    int link = -1;
    std::vector<std::pair<char32_t, int>> next;  // sorted by char

    int go(char32_t c) const;
  };
  std::vector<State> states_;
};

std::size_t longest_common_substring(std::u32string_view a, std::u32string_view b);

bool context_overlap(std::string_view a, std::string_view b, const OverlapPolicy& policy);

// Same predicate over already-normalized strings.
bool normalized_overlap(std::u32string_view a, std::u32string_view b, const OverlapPolicy& policy);

// Connected components of the overlap graph over relation indices. Members of
// a group are ascending and groups are ordered by their smallest member.
struct OverlapPartition {
  std::vector<std::vector<std::size_t>> groups;
  OverlapPolicy policy;

  std::size_t max_group_size() const;
};

OverlapPartition build_overlap_partition(const Corpus& corpus, const OverlapPolicy& policy);
OverlapPartition build_overlap_partition(const std::vector<std::string>& contexts,
                                         const OverlapPolicy& policy);

struct SplitConfig {
  std::array<double, 3> ratios{0.8, 0.1, 0.1};  // train, dev, test
  std::uint64_t seed = 0;

  void check() const;
};

struct OverlapPair {
  std::size_t first;
  std::size_t second;

  friend bool operator==(const OverlapPair&, const OverlapPair&) = default;
};

struct AuditResult {
  bool passed = true;
  std::size_t pairs_checked = 0;
  std::vector<OverlapPair> leaks;  // relation indices in different splits
};

// Pairwise check that no two relations in different assigned splits have
// overlapping contexts under the policy.
AuditResult audit_splits(const Corpus& corpus, const OverlapPolicy& policy);

struct SplitReport {
  std::size_t relation_count = 0;
  std::size_t group_count = 0;
  std::size_t max_group_size = 0;
  std::vector<std::size_t> group_sizes;  // in partition order
  std::array<std::size_t, 3> counts{};
  std::array<double, 3> target_ratios{};
  std::array<double, 3> achieved_ratios{};
  std::uint64_t seed = 0;
  OverlapPolicy policy;
  AuditResult audit;
};

struct SplitResult {
  Corpus corpus;
  SplitReport report;
};

// Places whole groups into train/dev/test, largest groups first, each into the
// split with the largest remaining deficit. Runs audit_splits afterwards and
// throws DataError (AUDIT_FAILED) if any leak is found.
SplitResult assign_splits(const Corpus& corpus, const OverlapPartition& partition,
                          const SplitConfig& config);

std::string split_report_to_json(const SplitReport& report);

}  // namespace crest
