#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccl/automaton.hpp"

namespace ccl {

enum class DeflateStrategy { Default, Filtered, HuffmanOnly, Rle, Fixed };

std::string to_string(DeflateStrategy s);
DeflateStrategy parse_deflate_strategy(std::string_view text);

/// Pinned parameter set of the raw (RFC 1951, unframed) DEFLATE compressor.
///
/// Rankings can shift between parameter sets, so every report records the
/// set it was produced with. On disk this is a `key = value` text file;
/// see config/compressor.conf.
struct CompressorConfig {
  int level = 6;         // zlib effort, 0..9
  int window_bits = 15;  // 32 KiB window
  int mem_level = 8;     // zlib hash-table size, 1..9
  DeflateStrategy strategy = DeflateStrategy::Default;

  /// Stable identifier, e.g. "deflate-raw-l6-w15-m8-default".
  std::string id() const;
  std::string serialize() const;
  void validate() const;

  static CompressorConfig parse(std::string_view text);
  static CompressorConfig load(const std::filesystem::path& path);

  friend bool operator==(const CompressorConfig&, const CompressorConfig&) = default;
};

/// Unit in which compressed lengths are reported.
inline constexpr std::string_view kLengthUnit = "bytes";

/// Raw DEFLATE stream of `data`.
std::vector<std::uint8_t> deflate_raw(std::span<const std::uint8_t> data, const CompressorConfig& cfg = {});

/// Length in bytes of deflate_raw(data, cfg).
std::size_t compressed_length(std::span<const std::uint8_t> data, const CompressorConfig& cfg = {});

/// Row-major, one byte per cell ('0' + value), each row terminated by '\n'.
/// Throws std::domain_error for a cell value above 9.
std::vector<std::uint8_t> encode_diagram(const SpaceTimeDiagram& d);

/// One byte per value ('0' + value), no terminator.
std::vector<std::uint8_t> encode_sequence(std::span<const Cell> values);

struct ComplexityEstimate {
  std::size_t raw_length = 0;
  std::size_t compressed_length = 0;

  double ratio() const {
    return raw_length == 0 ? 0.0 : static_cast<double>(compressed_length) / static_cast<double>(raw_length);
  }
};

ComplexityEstimate estimate(std::span<const std::uint8_t> data, const CompressorConfig& cfg = {});

ComplexityEstimate ca_complexity(const RuleSpec& rule, const InitialCondition& init, std::size_t steps,
                                 const CompressorConfig& cfg = {});

ComplexityEstimate tm_complexity(const RuleSpec& rule, std::size_t steps, const CompressorConfig& cfg = {},
                                 StateSequenceMode mode = StateSequenceMode::DistinctCount);

}  // namespace ccl
