#include "ccl/complexity.hpp"

#include <zlib.h>

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ccl {

namespace {

int zlib_strategy(DeflateStrategy s) {
  switch (s) {
    case DeflateStrategy::Default: return Z_DEFAULT_STRATEGY;
    case DeflateStrategy::Filtered: return Z_FILTERED;
    case DeflateStrategy::HuffmanOnly: return Z_HUFFMAN_ONLY;
    case DeflateStrategy::Rle: return Z_RLE;
    case DeflateStrategy::Fixed: return Z_FIXED;
  }
  return Z_DEFAULT_STRATEGY;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view key, std::string_view value) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw std::invalid_argument("compressor config: '" + std::string(key) + "' is not an integer");
  }
  return out;
}

class DeflateStream {
 public:
  explicit DeflateStream(const CompressorConfig& cfg) {
    cfg.validate();
    // Negative window bits select a raw stream without zlib framing.
    if (deflateInit2(&strm_, cfg.level, Z_DEFLATED, -cfg.window_bits, cfg.mem_level,
                     zlib_strategy(cfg.strategy)) != Z_OK) {
      throw std::runtime_error("deflateInit2 failed");
    }
  }
  ~DeflateStream() { deflateEnd(&strm_); }
  DeflateStream(const DeflateStream&) = delete;
  DeflateStream& operator=(const DeflateStream&) = delete;

  std::vector<std::uint8_t> run(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> out(deflateBound(&strm_, static_cast<uLong>(data.size())) + 16);
    strm_.next_in = const_cast<Bytef*>(data.data());
    strm_.avail_in = static_cast<uInt>(data.size());
    strm_.next_out = out.data();
    strm_.avail_out = static_cast<uInt>(out.size());
    const int rc = deflate(&strm_, Z_FINISH);
    if (rc != Z_STREAM_END) throw std::runtime_error("deflate did not finish in one pass");
    out.resize(strm_.total_out);
    return out;
  }

 private:
  z_stream strm_{};
};

}  // namespace

std::string to_string(DeflateStrategy s) {
  switch (s) {
    case DeflateStrategy::Default: return "default";
    case DeflateStrategy::Filtered: return "filtered";
    case DeflateStrategy::HuffmanOnly: return "huffman";
    case DeflateStrategy::Rle: return "rle";
    case DeflateStrategy::Fixed: return "fixed";
  }
  return "default";
}

DeflateStrategy parse_deflate_strategy(std::string_view text) {
  for (auto s : {DeflateStrategy::Default, DeflateStrategy::Filtered, DeflateStrategy::HuffmanOnly,
                 DeflateStrategy::Rle, DeflateStrategy::Fixed}) {
    if (to_string(s) == text) return s;
  }
  throw std::invalid_argument("unknown deflate strategy '" + std::string(text) + "'");
}

std::string CompressorConfig::id() const {
  return "deflate-raw-l" + std::to_string(level) + "-w" + std::to_string(window_bits) + "-m" +
         std::to_string(mem_level) + "-" + to_string(strategy);
}

void CompressorConfig::validate() const {
  if (level < 0 || level > 9) throw std::invalid_argument("compressor level must be in [0, 9]");
  if (window_bits < 9 || window_bits > 15) throw std::invalid_argument("window_bits must be in [9, 15]");
  if (mem_level < 1 || mem_level > 9) throw std::invalid_argument("mem_level must be in [1, 9]");
}

std::string CompressorConfig::serialize() const {
  std::ostringstream os;
  os << "# raw DEFLATE (RFC 1951) parameters\n"
     << "format = deflate-raw\n"
     << "level = " << level << "\n"
     << "window_bits = " << window_bits << "\n"
     << "mem_level = " << mem_level << "\n"
     << "strategy = " << to_string(strategy) << "\n"
     << "unit = " << kLengthUnit << "\n";
  return os.str();
}

CompressorConfig CompressorConfig::parse(std::string_view text) {
  CompressorConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("compressor config line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "format") {
      if (value != "deflate-raw") throw std::invalid_argument("compressor config: only format deflate-raw is supported");
    } else if (key == "level") {
      cfg.level = parse_int(key, value);
    } else if (key == "window_bits") {
      cfg.window_bits = parse_int(key, value);
    } else if (key == "mem_level") {
      cfg.mem_level = parse_int(key, value);
    } else if (key == "strategy") {
      cfg.strategy = parse_deflate_strategy(value);
    } else if (key == "unit") {
      if (value != kLengthUnit) throw std::invalid_argument("compressor config: unit must be bytes");
    } else {
      throw std::invalid_argument("compressor config: unknown key '" + std::string(key) + "'");
    }
  }
  cfg.validate();
  return cfg;
}

CompressorConfig CompressorConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open compressor config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::vector<std::uint8_t> deflate_raw(std::span<const std::uint8_t> data, const CompressorConfig& cfg) {
  DeflateStream stream(cfg);
  return stream.run(data);
}

std::size_t compressed_length(std::span<const std::uint8_t> data, const CompressorConfig& cfg) {
  return deflate_raw(data, cfg).size();
}

std::vector<std::uint8_t> encode_diagram(const SpaceTimeDiagram& d) {
  std::vector<std::uint8_t> out;
  out.reserve((d.width() + 1) * d.rows());
  for (std::size_t j = 0; j < d.rows(); ++j) {
    for (Cell c : d.row(j)) {
      if (c > 9) throw std::domain_error("encode_diagram: cell value above 9");
      out.push_back(static_cast<std::uint8_t>(0x30 + c));
    }
    out.push_back(0x0A);
  }
  return out;
}

std::vector<std::uint8_t> encode_sequence(std::span<const Cell> values) {
  std::vector<std::uint8_t> out;
  out.reserve(values.size());
  for (Cell c : values) {
    if (c > 9) throw std::domain_error("encode_sequence: value above 9");
    out.push_back(static_cast<std::uint8_t>(0x30 + c));
  }
  return out;
}

ComplexityEstimate estimate(std::span<const std::uint8_t> data, const CompressorConfig& cfg) {
  return {data.size(), compressed_length(data, cfg)};
}

ComplexityEstimate ca_complexity(const RuleSpec& rule, const InitialCondition& init, std::size_t steps,
                                 const CompressorConfig& cfg) {
  return estimate(encode_diagram(evolve_ca(rule, init, steps)), cfg);
}

ComplexityEstimate tm_complexity(const RuleSpec& rule, std::size_t steps, const CompressorConfig& cfg,
                                 StateSequenceMode mode) {
  return estimate(encode_sequence(reached_states_sequence(rule, steps, mode)), cfg);
}

}  // namespace ccl
