#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ccl/automaton.hpp"
#include "ccl/complexity.hpp"

namespace ccl {

struct RankedRule {
  RuleSpec rule;
  std::size_t raw_length = 0;
  std::size_t compressed_length = 0;
  int cluster = 0;
};

/// Rules ranked by compressed length. Entries are sorted by compressed
/// length ascending, ties by rule; cluster ids are dense from 0 and
/// ordered by cluster mean.
struct ClassificationReport {
  std::vector<RankedRule> entries;
  std::size_t steps = 0;
  InitialCondition init;
  CompressorConfig compressor;
  int cluster_count = 1;
  /// Second-level split of the top cluster: per entry, the sub-cluster id
  /// within the top cluster, or -1 for entries outside it. Empty when no
  /// split was requested.
  std::vector<int> subclusters;

  std::vector<RuleSpec> cluster_members(int cluster) const;
};

/// Evaluates every rule from `init` for `steps` steps and sorts by
/// compressed length. All entries are placed in cluster 0.
ClassificationReport rank_rules(std::span<const RuleSpec> rules, const InitialCondition& init, std::size_t steps,
                                const CompressorConfig& cfg = {}, unsigned threads = 1);

/// Partitions 1-D values into k groups by cutting the sorted values at the
/// k-1 largest gaps (single-linkage clustering in one dimension). Equal
/// gaps are cut leftmost first. Returned ids follow input order and are
/// numbered by increasing cluster mean. Throws std::domain_error unless
/// 1 <= k <= number of distinct values.
std::vector<int> cluster_1d(std::span<const double> values, std::size_t k);

/// Re-clusters a report's entries by compressed length into k groups.
void assign_clusters(ClassificationReport& report, std::size_t k);

/// Splits the highest cluster of `report` once more with k = 2 and stores the
/// result in report.subclusters. No-op when that cluster has fewer than two
/// distinct lengths.
void split_top_cluster(ClassificationReport& report);

/// All 256 elementary rules from a single black cell, two clusters
/// ("classes 1|2" low, "classes 3|4" high) plus the split of the high one.
ClassificationReport classify_eca(std::size_t steps, const CompressorConfig& cfg = {}, unsigned threads = 1);

/// Deterministic uniform sample without replacement from a rule space,
/// returned in ascending rule order. Throws std::domain_error when `size`
/// is zero or exceeds the space size.
std::vector<RuleSpec> sample_rule_space(MachineKind kind, int colors, int states, std::size_t size,
                                        std::uint64_t seed);

/// Uniform integer in [0, bound) by masked rejection sampling. Only raw
/// mt19937_64 output is consumed, so results are identical across standard
/// libraries (std::uniform_int_distribution is implementation-defined).
BigUint uniform_below(const BigUint& bound, std::mt19937_64& rng);

}  // namespace ccl
