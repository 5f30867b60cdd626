#include "ccl/transition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ccl/classify.hpp"
#include "ccl/parallel.hpp"

namespace ccl {

namespace {

std::vector<std::uint64_t> ic_range(std::size_t count, bool include_zero) {
  std::vector<std::uint64_t> ics(count);
  std::iota(ics.begin(), ics.end(), include_zero ? 0 : 1);
  return ics;
}

double median_of(std::vector<double> v) {
  const std::size_t n = v.size();
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (n % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(v.begin(), mid);
  return (lower + upper) / 2.0;
}

std::vector<double> to_doubles(std::span<const std::size_t> v) {
  return {v.begin(), v.end()};
}

}  // namespace

void TransitionParams::validate() const {
  if (ic_count < 2) throw std::domain_error("transition: need at least 2 initial conditions");
  if (block_steps < 1) throw std::domain_error("transition: block_steps must be at least 1");
  if (blocks < 2) throw std::domain_error("transition: need at least 2 blocks to fit a line");
  compressor.validate();
}

std::vector<double> IcProfile::values() const {
  std::vector<double> out = to_doubles(lengths);
  if (normalized) {
    for (double& v : out) v /= static_cast<double>(steps);
  }
  return out;
}

std::vector<std::vector<std::size_t>> block_lengths(const RuleSpec& rule, std::span<const std::uint64_t> ic_numbers,
                                                    std::size_t block_steps, std::size_t blocks,
                                                    const CompressorConfig& cfg, unsigned threads) {
  const std::size_t longest = block_steps * blocks;
  std::vector<std::vector<std::size_t>> out(blocks, std::vector<std::size_t>(ic_numbers.size()));
  parallel_for(ic_numbers.size(), threads, [&](std::size_t i) {
    const auto init = initial_condition(ic_numbers[i]);
    const auto full = evolve_ca(rule, init, longest);
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t t = (b + 1) * block_steps;
      const auto view = t == longest ? full : full.window(t + 1, longest - t, diagram_width(init.size(), t));
      out[b][i] = compressed_length(encode_diagram(view), cfg);
    }
  });
  return out;
}

IcProfile ic_profile(const RuleSpec& rule, std::size_t ic_count, std::size_t steps, bool normalize,
                     const CompressorConfig& cfg, unsigned threads) {
  if (ic_count < 1) throw std::domain_error("ic_profile: need at least one initial condition");
  if (steps < 1) throw std::domain_error("ic_profile: steps must be at least 1");
  const auto ics = ic_range(ic_count, true);
  IcProfile profile{rule, steps, normalize, {}};
  profile.lengths = parallel_map<std::size_t>(ics.size(), threads, [&](std::size_t j) {
    return compressed_length(encode_diagram(evolve_ca(rule, initial_condition(ics[j]), steps)), cfg);
  });
  return profile;
}

double characteristic_exponent(std::span<const double> lengths, double normalizer, DiffAggregate aggregate) {
  if (lengths.size() < 2) throw std::domain_error("characteristic_exponent: need at least 2 lengths");
  if (!(normalizer > 0)) throw std::domain_error("characteristic_exponent: normalizer must be positive");
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i) {
    const double d = std::abs(lengths[i + 1] - lengths[i]);
    acc = aggregate == DiffAggregate::Mean ? acc + d : std::max(acc, d);
  }
  if (aggregate == DiffAggregate::Mean) acc /= static_cast<double>(lengths.size() - 1);
  return acc / normalizer;
}

double light_cone_volume(std::span<const std::uint64_t> ic_numbers, std::size_t steps) {
  double mean_size = 0.0;
  for (auto n : ic_numbers) mean_size += static_cast<double>(initial_condition(n).size());
  mean_size /= static_cast<double>(ic_numbers.size());
  const double t = static_cast<double>(steps);
  return (t + 1.0) * mean_size + t * (t + 1.0);
}

namespace {

double normalizer_for(const ExponentOptions& options, std::span<const std::uint64_t> ics, std::size_t steps) {
  return options.normalization == Normalization::Time ? static_cast<double>(steps) : light_cone_volume(ics, steps);
}

}  // namespace

double characteristic_exponent(const RuleSpec& rule, std::size_t ic_count, std::size_t steps,
                               const ExponentOptions& options, const CompressorConfig& cfg, unsigned threads) {
  if (ic_count < 2) throw std::domain_error("characteristic_exponent: need at least 2 initial conditions");
  if (steps < 1) throw std::domain_error("characteristic_exponent: steps must be at least 1");
  const auto ics = ic_range(ic_count, options.include_ic_zero);
  const auto lengths = block_lengths(rule, ics, steps, 1, cfg, threads);
  return characteristic_exponent(to_doubles(lengths[0]), normalizer_for(options, ics, steps), options.aggregate);
}

std::vector<double> transition_sequence(const RuleSpec& rule, const TransitionParams& params) {
  params.validate();
  const auto ics = ic_range(params.ic_count, params.exponent.include_ic_zero);
  const auto lengths = block_lengths(rule, ics, params.block_steps, params.blocks, params.compressor, params.threads);
  std::vector<double> seq(params.blocks);
  for (std::size_t b = 0; b < params.blocks; ++b) {
    const std::size_t t = (b + 1) * params.block_steps;
    seq[b] = characteristic_exponent(to_doubles(lengths[b]), normalizer_for(params.exponent, ics, t),
                                     params.exponent.aggregate);
  }
  return seq;
}

LineFit least_squares_fit(std::span<const double> seq) {
  const std::size_t n = seq.size();
  if (n < 2) throw std::domain_error("least_squares_fit: need at least 2 points");
  const double x_mean = (static_cast<double>(n) + 1.0) / 2.0;
  const double y_mean = std::accumulate(seq.begin(), seq.end(), 0.0) / static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = static_cast<double>(i + 1) - x_mean;
    sxx += dx * dx;
    sxy += dx * (seq[i] - y_mean);
  }
  const double slope = sxy / sxx;
  return {y_mean - slope * x_mean, slope};
}

TransitionRecord transition_record(const RuleSpec& rule, const TransitionParams& params) {
  TransitionRecord rec;
  rec.rule = rule;
  rec.ic_count = params.ic_count;
  rec.block_steps = params.block_steps;
  rec.sequence = transition_sequence(rule, params);
  rec.fit = least_squares_fit(rec.sequence);
  rec.coefficient = rec.fit.slope;
  return rec;
}

double transition_coefficient(const RuleSpec& rule, const TransitionParams& params) {
  return transition_record(rule, params).coefficient;
}

double robust_scale(std::span<const double> values) {
  if (values.empty()) return 0.0;
  std::vector<double> v(values.begin(), values.end());
  const double med = median_of(v);
  double mean_abs = 0.0;
  for (double& x : v) {
    x = std::abs(x - med);
    mean_abs += x;
  }
  mean_abs /= static_cast<double>(v.size());
  const double mad = median_of(v);
  return mad > 0 ? 1.4826 * mad : mean_abs;
}

std::vector<std::size_t> detect_spikes(std::span<const double> profile, double q) {
  std::vector<std::size_t> out;
  if (profile.empty()) return out;
  const double med = median_of({profile.begin(), profile.end()});
  const double scale = robust_scale(profile);
  if (scale <= 0) return out;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (profile[j] - med > q * scale) out.push_back(j);
  }
  return out;
}

InterestingIcs interesting_initial_conditions(const RuleSpec& rule, std::size_t count, std::size_t ic_range_size,
                                              const TransitionParams& params) {
  params.validate();
  InterestingIcs result;
  result.coefficient = transition_coefficient(rule, params);
  result.below_threshold = !(result.coefficient > params.phase_threshold);
  if (count == 0 || ic_range_size == 0) return result;

  const auto ics = ic_range(ic_range_size, true);
  const auto lengths = block_lengths(rule, ics, params.block_steps, params.blocks, params.compressor, params.threads);
  std::vector<double> score(ics.size(), 0.0);
  for (const auto& block : lengths) {
    const auto values = to_doubles(block);
    const double med = median_of(values);
    const double scale = robust_scale(values);
    if (scale <= 0) continue;
    for (std::size_t j = 0; j < values.size(); ++j) score[j] += std::max(0.0, (values[j] - med) / scale);
  }

  std::vector<std::size_t> order(ics.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });
  for (std::size_t i = 0; i < order.size() && result.ics.size() < count; ++i) {
    if (score[order[i]] <= 0) break;
    result.ics.push_back(ics[order[i]]);
  }
  std::sort(result.ics.begin(), result.ics.end());
  return result;
}

std::vector<CoefficientEntry> coefficient_classification(std::span<const RuleSpec> rules,
                                                         const TransitionParams& params, std::size_t clusters) {
  if (rules.empty()) throw std::domain_error("coefficient_classification: empty rule set");
  params.validate();
  TransitionParams inner = params;
  inner.threads = 1;
  auto entries = parallel_map<CoefficientEntry>(rules.size(), params.threads, [&](std::size_t i) {
    return CoefficientEntry{transition_record(rules[i], inner), 0};
  });
  std::sort(entries.begin(), entries.end(), [](const CoefficientEntry& a, const CoefficientEntry& b) {
    if (a.record.coefficient != b.record.coefficient) return a.record.coefficient > b.record.coefficient;
    return a.record.rule < b.record.rule;
  });

  std::vector<double> coefficients;
  for (const auto& e : entries) coefficients.push_back(e.record.coefficient);
  std::vector<double> sorted = coefficients;
  std::sort(sorted.begin(), sorted.end());
  const auto distinct = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  const auto ids = cluster_1d(coefficients, std::clamp<std::size_t>(clusters, 1, distinct));
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i].cluster = ids[i];
  return entries;
}

}  // namespace ccl
