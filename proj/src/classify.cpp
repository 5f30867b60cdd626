#include "ccl/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ccl/parallel.hpp"

namespace ccl {

std::vector<RuleSpec> ClassificationReport::cluster_members(int cluster) const {
  std::vector<RuleSpec> out;
  for (const auto& e : entries) {
    if (e.cluster == cluster) out.push_back(e.rule);
  }
  return out;
}

ClassificationReport rank_rules(std::span<const RuleSpec> rules, const InitialCondition& init, std::size_t steps,
                                const CompressorConfig& cfg, unsigned threads) {
  if (rules.empty()) throw std::domain_error("rank_rules: empty rule set");
  ClassificationReport report;
  report.steps = steps;
  report.init = init;
  report.compressor = cfg;
  report.entries = parallel_map<RankedRule>(rules.size(), threads, [&](std::size_t i) {
    const auto est = ca_complexity(rules[i], init, steps, cfg);
    return RankedRule{rules[i], est.raw_length, est.compressed_length, 0};
  });
  std::sort(report.entries.begin(), report.entries.end(), [](const RankedRule& a, const RankedRule& b) {
    if (a.compressed_length != b.compressed_length) return a.compressed_length < b.compressed_length;
    return a.rule < b.rule;
  });
  return report;
}

std::vector<int> cluster_1d(std::span<const double> values, std::size_t k) {
  if (values.empty()) throw std::domain_error("cluster_1d: empty input");
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  // Gaps between consecutive distinct sorted values, keyed by the sorted
  // position after which a cut would fall.
  struct Gap {
    double size;
    std::size_t after;
  };
  std::vector<Gap> gaps;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const double g = values[order[i + 1]] - values[order[i]];
    if (g > 0) gaps.push_back({g, i});
  }
  const std::size_t distinct = gaps.size() + 1;
  if (k < 1 || k > distinct) throw std::domain_error("cluster_1d: k must be in [1, distinct value count]");

  std::stable_sort(gaps.begin(), gaps.end(), [](const Gap& a, const Gap& b) { return a.size > b.size; });
  std::vector<std::size_t> cuts;
  for (std::size_t c = 0; c + 1 < k; ++c) cuts.push_back(gaps[c].after);
  std::sort(cuts.begin(), cuts.end());

  // Clusters are contiguous in sorted order, so left-to-right numbering is
  // also numbering by increasing mean.
  std::vector<int> ids(values.size());
  int current = 0;
  std::size_t next_cut = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    ids[order[pos]] = current;
    if (next_cut < cuts.size() && cuts[next_cut] == pos) {
      ++current;
      ++next_cut;
    }
  }
  return ids;
}

void assign_clusters(ClassificationReport& report, std::size_t k) {
  std::vector<double> lengths;
  lengths.reserve(report.entries.size());
  for (const auto& e : report.entries) lengths.push_back(static_cast<double>(e.compressed_length));
  const auto ids = cluster_1d(lengths, k);
  for (std::size_t i = 0; i < ids.size(); ++i) report.entries[i].cluster = ids[i];
  report.cluster_count = static_cast<int>(k);
  report.subclusters.clear();
}

void split_top_cluster(ClassificationReport& report) {
  const int top = report.cluster_count - 1;
  std::vector<std::size_t> members;
  std::vector<double> lengths;
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    if (report.entries[i].cluster == top) {
      members.push_back(i);
      lengths.push_back(static_cast<double>(report.entries[i].compressed_length));
    }
  }
  std::set<double> distinct(lengths.begin(), lengths.end());
  if (distinct.size() < 2) return;
  const auto ids = cluster_1d(lengths, 2);
  report.subclusters.assign(report.entries.size(), -1);
  for (std::size_t m = 0; m < members.size(); ++m) report.subclusters[members[m]] = ids[m];
}

ClassificationReport classify_eca(std::size_t steps, const CompressorConfig& cfg, unsigned threads) {
  std::vector<RuleSpec> rules;
  rules.reserve(256);
  for (unsigned r = 0; r < 256; ++r) rules.push_back(RuleSpec::eca(r));
  auto report = rank_rules(rules, InitialCondition::single_cell(), steps, cfg, threads);
  assign_clusters(report, 2);
  split_top_cluster(report);
  return report;
}

BigUint uniform_below(const BigUint& bound, std::mt19937_64& rng) {
  if (bound <= 0) throw std::domain_error("uniform_below: bound must be positive");
  if (bound == 1) return 0;
  const BigUint top = bound - 1;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(top)) + 1;
  const unsigned words = (bits + 63) / 64;
  const BigUint mask = (BigUint(1) << bits) - 1;
  for (;;) {
    BigUint candidate = 0;
    for (unsigned w = 0; w < words; ++w) candidate = (candidate << 64) | rng();
    candidate &= mask;
    if (candidate < bound) return candidate;
  }
}

std::vector<RuleSpec> sample_rule_space(MachineKind kind, int colors, int states, std::size_t size,
                                        std::uint64_t seed) {
  if (size == 0) throw std::domain_error("sample_rule_space: sample size must be at least 1");
  RuleSpec probe{kind, colors, kind == MachineKind::CellularAutomaton ? 1 : states, 0};
  probe.validate();
  const BigUint space = probe.space_size();
  if (BigUint(size) > space) throw std::domain_error("sample_rule_space: sample larger than the rule space");

  std::mt19937_64 rng(seed);
  std::vector<BigUint> numbers;
  constexpr std::uint64_t kEnumerateLimit = 1ULL << 22;
  if (space <= kEnumerateLimit) {
    // Partial Fisher-Yates over the enumerated space.
    const auto n = static_cast<std::uint64_t>(space);
    std::vector<std::uint64_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < size; ++i) {
      const auto j = i + static_cast<std::uint64_t>(uniform_below(BigUint(n - i), rng));
      std::swap(pool[i], pool[j]);
      numbers.emplace_back(pool[i]);
    }
  } else {
    std::set<BigUint> seen;
    while (seen.size() < size) {
      auto candidate = uniform_below(space, rng);
      if (seen.insert(candidate).second) numbers.push_back(std::move(candidate));
    }
  }
  std::sort(numbers.begin(), numbers.end());

  std::vector<RuleSpec> out;
  out.reserve(numbers.size());
  for (auto& n : numbers) {
    RuleSpec r = probe;
    r.number = std::move(n);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ccl
