#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ccl/automaton.hpp"
#include "ccl/complexity.hpp"

namespace ccl {

// Phase-transition analysis over Gray-numbered initial conditions.

enum class DiffAggregate { Mean, Max };
enum class Normalization {
  Time,    // divide by the runtime t
  Volume,  // divide by the mean light-cone area (t+1)|init| + t(t+1)
};

struct ExponentOptions {
  DiffAggregate aggregate = DiffAggregate::Mean;
  Normalization normalization = Normalization::Time;
  /// Use IC numbers 0..n-1 instead of 1..n.
  bool include_ic_zero = false;
};

/// Parameters of a transition-coefficient run. Defaults: n = 40 ICs, runtimes
/// up to 600 steps in blocks of 50. `phase_threshold` is the value of C above
/// which a rule is considered to have phase transitions; 1.13 is the unit
/// threshold rescaled so that rule 22 scores its reference value of 2.5.
struct TransitionParams {
  std::size_t ic_count = 40;
  std::size_t block_steps = 50;
  std::size_t blocks = 12;
  ExponentOptions exponent;
  double phase_threshold = 1.13;
  CompressorConfig compressor;
  unsigned threads = 1;

  /// Throws std::domain_error for ic_count < 2, block_steps < 1 or blocks < 2.
  void validate() const;
};

struct IcProfile {
  RuleSpec rule;
  std::size_t steps = 0;
  bool normalized = false;
  /// lengths[j] is the compressed length of the evolution from initial_condition(j).
  std::vector<std::size_t> lengths;

  /// lengths, divided by `steps` when `normalized` is set.
  std::vector<double> values() const;
};

struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
};

struct TransitionRecord {
  RuleSpec rule;
  std::size_t ic_count = 0;
  std::size_t block_steps = 0;
  std::vector<double> sequence;  // characteristic exponent at t = b * block_steps, b = 1..blocks
  LineFit fit;
  double coefficient = 0.0;  // == fit.slope
};

/// Compressed lengths of the evolutions from each listed IC number, at
/// runtimes block_steps, 2*block_steps, ..., blocks*block_steps.
/// Result is indexed [block][ic]. Each IC is evolved once for the longest
/// runtime; shorter runtimes are exact windows of that diagram.
std::vector<std::vector<std::size_t>> block_lengths(const RuleSpec& rule, std::span<const std::uint64_t> ic_numbers,
                                                    std::size_t block_steps, std::size_t blocks,
                                                    const CompressorConfig& cfg = {}, unsigned threads = 1);

IcProfile ic_profile(const RuleSpec& rule, std::size_t ic_count, std::size_t steps, bool normalize = false,
                     const CompressorConfig& cfg = {}, unsigned threads = 1);

/// Characteristic exponent of a sequence of compressed lengths over
/// consecutive ICs: the mean (or max) of |lengths[i+1] - lengths[i]|
/// divided by `normalizer`. Throws std::domain_error when fewer than two
/// lengths are given or normalizer <= 0.
double characteristic_exponent(std::span<const double> lengths, double normalizer,
                               DiffAggregate aggregate = DiffAggregate::Mean);

/// Light-cone area used by Normalization::Volume.
double light_cone_volume(std::span<const std::uint64_t> ic_numbers, std::size_t steps);

double characteristic_exponent(const RuleSpec& rule, std::size_t ic_count, std::size_t steps,
                               const ExponentOptions& options = {}, const CompressorConfig& cfg = {},
                               unsigned threads = 1);

std::vector<double> transition_sequence(const RuleSpec& rule, const TransitionParams& params);

/// Ordinary least squares of seq[i] against x = 1..N. Throws
/// std::domain_error for fewer than two points.
LineFit least_squares_fit(std::span<const double> seq);

TransitionRecord transition_record(const RuleSpec& rule, const TransitionParams& params);

double transition_coefficient(const RuleSpec& rule, const TransitionParams& params);

// Spike detection

/// Robust scale of a sample: 1.4826 * median absolute deviation from the
/// median, falling back to the mean absolute deviation when the MAD is 0.
double robust_scale(std::span<const double> values);

/// Indices j whose value exceeds the profile median by more than
/// q * robust_scale(profile). Ascending.
std::vector<std::size_t> detect_spikes(std::span<const double> profile, double q = 3.0);

struct InterestingIcs {
  std::vector<std::uint64_t> ics;  // ascending, duplicate-free
  double coefficient = 0.0;
  /// Set when the rule's coefficient does not exceed the phase threshold;
  /// the list is then a best-effort answer.
  bool below_threshold = false;
};

/// The `count` IC numbers in [0, ic_range) that stand out most across the
/// block runtimes of `params`. Each IC is scored by the sum over blocks of
/// its robust z-score (value above the block's median, in units of
/// robust_scale); only positive scores qualify.
InterestingIcs interesting_initial_conditions(const RuleSpec& rule, std::size_t count, std::size_t ic_range,
                                              const TransitionParams& params);

struct CoefficientEntry {
  TransitionRecord record;
  int cluster = 0;
};

/// Transition records for every rule, sorted by coefficient descending
/// (ties by rule), with cluster_1d applied to the coefficients. Cluster 0
/// holds the lowest coefficients. k is clamped to the number of distinct
/// coefficients.
std::vector<CoefficientEntry> coefficient_classification(std::span<const RuleSpec> rules,
                                                         const TransitionParams& params,
                                                         std::size_t clusters = 2);

}  // namespace ccl
