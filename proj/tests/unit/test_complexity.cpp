#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "ccl/complexity.hpp"
#include "oracles.hpp"

using namespace ccl;
using Bytes = std::vector<std::uint8_t>;

namespace {

Bytes random_bytes(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng() >> 56);
  return out;
}

void require_round_trip(const Bytes& data, const CompressorConfig& cfg = {}) {
  const auto stream = deflate_raw(data, cfg);
  REQUIRE(stream.size() == compressed_length(data, cfg));
  const auto back = oracle::inflate(stream, data.size());
  REQUIRE(back.has_value());
  REQUIRE(*back == data);
}

}  // namespace

TEST_CASE("encode_diagram layout") {
  SpaceTimeDiagram one(1, 3, 2);
  one.row(0)[1] = 1;
  CHECK(encode_diagram(one) == Bytes{0x30, 0x31, 0x30, 0x0A});
  CHECK(encode_diagram(SpaceTimeDiagram(2, 2, 2)) == Bytes{0x30, 0x30, 0x0A, 0x30, 0x30, 0x0A});
  SpaceTimeDiagram bad(1, 1, 10);
  bad.row(0)[0] = 10;
  CHECK_THROWS_AS(encode_diagram(bad), std::domain_error);
  CHECK(encode_sequence(std::vector<Cell>{1, 2, 2}) == Bytes{'1', '2', '2'});
}

TEST_CASE("compressed length of simple inputs") {
  CHECK(compressed_length(Bytes{}) <= 8);
  CHECK(compressed_length(Bytes(10'000, 0x30)) < 100);
  CHECK(compressed_length(random_bytes(10'000, 1)) > 9'000);
}

TEST_CASE("streams round-trip through an independent inflater") {
  require_round_trip(Bytes{});
  require_round_trip(Bytes(10'000, 0x30));
  require_round_trip(random_bytes(10'000, 2));
  require_round_trip(encode_diagram(evolve_ca(RuleSpec::eca(110), InitialCondition{}, 300)));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    Bytes data(rng() % 5000);
    const int alphabet = 1 + int(rng() % 4);
    for (auto& b : data) b = static_cast<std::uint8_t>('0' + rng() % alphabet);
    CompressorConfig cfg;
    cfg.level = int(rng() % 10);
    cfg.window_bits = 9 + int(rng() % 7);
    cfg.mem_level = 1 + int(rng() % 9);
    cfg.strategy = static_cast<DeflateStrategy>(rng() % 5);
    require_round_trip(data, cfg);
  }
}

TEST_CASE("compressed length is stable across calls") {
  const auto data = encode_diagram(evolve_ca(RuleSpec::eca(30), InitialCondition{}, 200));
  const auto first = compressed_length(data);
  for (int i = 0; i < 100; ++i) REQUIRE(compressed_length(data) == first);
}

TEST_CASE("subadditivity on repeated input") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    Bytes x = random_bytes(1000 + rng() % 4000, rng());
    Bytes xx = x;
    xx.insert(xx.end(), x.begin(), x.end());
    REQUIRE(compressed_length(xx) < 2 * compressed_length(x) + 64);
  }
}

TEST_CASE("raw length is linear in runtime") {
  for (std::size_t t = 1; t < 60; t += 7) {
    const auto e = ca_complexity(RuleSpec::eca(90), InitialCondition{}, t);
    CHECK(e.raw_length == (t + 1) * (diagram_width(1, t) + 1));
  }
}

TEST_CASE("elementary examples") {
  const std::size_t t = 200;
  const auto zero = ca_complexity(RuleSpec::eca(0), InitialCondition{}, t);
  // all-zero diagram of the same shape
  const auto baseline = compressed_length(encode_diagram(SpaceTimeDiagram(t + 1, diagram_width(1, t), 2)));
  CHECK(zero.compressed_length <= 2 * baseline);
  CHECK(2 * zero.compressed_length >= baseline);
  const auto c90 = ca_complexity(RuleSpec::eca(90), InitialCondition{}, t).compressed_length;
  const auto c30 = ca_complexity(RuleSpec::eca(30), InitialCondition{}, t).compressed_length;
  CHECK(zero.compressed_length < c90);
  CHECK(c90 < c30);
}

TEST_CASE("TM sequence complexity orders by number of state changes") {
  const std::size_t t = 200;
  // constant state sequence
  const auto still = tm_complexity(RuleSpec::tm(2, 3, 0), t, {}, StateSequenceMode::StateAtStep);
  CHECK(still.compressed_length == compressed_length(Bytes(t + 1, '0')));
  // one switch at the first step
  std::vector<TmAction> once(6, TmAction{1, 0, +1});
  const auto one = tm_complexity(RuleSpec::tm(2, 3, encode_tm_rule(2, 3, once)), t, {}, StateSequenceMode::StateAtStep);
  // alternating states, with the head wandering over an uneven tape
  std::vector<TmAction> flip{{1, 1, +1}, {1, 2, -1}, {1, 0, +1}, {0, 2, +1}, {0, 0, -1}, {0, 1, +1}};
  const auto many = tm_complexity(RuleSpec::tm(2, 3, encode_tm_rule(2, 3, flip)), t, {}, StateSequenceMode::StateAtStep);
  CHECK(still.compressed_length <= one.compressed_length);
  CHECK(one.compressed_length < many.compressed_length);
}

TEST_CASE("compressor configuration file") {
  CompressorConfig cfg;
  CHECK(cfg.id() == "deflate-raw-l6-w15-m8-default");
  CHECK(CompressorConfig::parse(cfg.serialize()) == cfg);
  const auto parsed = CompressorConfig::parse("# comment\nlevel = 9\nstrategy = rle\n\nunit = bytes\n");
  CHECK(parsed.level == 9);
  CHECK(parsed.strategy == DeflateStrategy::Rle);
  CHECK(parsed.window_bits == 15);
  CHECK_THROWS(CompressorConfig::parse("level = 12\n"));
  CHECK_THROWS(CompressorConfig::parse("window_bits = 8\n"));
  CHECK_THROWS(CompressorConfig::parse("colour = blue\n"));
  CHECK_THROWS(CompressorConfig::parse("unit = bits\n"));
  CHECK_THROWS(CompressorConfig::parse("level\n"));
  CHECK_THROWS(parse_deflate_strategy("fast"));

  const auto path = std::filesystem::temp_directory_path() / "ccl_test_compressor.conf";
  std::ofstream(path) << "level = 1\nmem_level = 9\n";
  const auto loaded = CompressorConfig::load(path);
  CHECK(loaded.level == 1);
  CHECK(loaded.mem_level == 9);
  std::filesystem::remove(path);
  CHECK_THROWS(CompressorConfig::load(path));
}

TEST_CASE("shipped compressor configuration matches the defaults") {
  const auto path = std::filesystem::path(CCL_SOURCE_DIR) / "config" / "compressor.conf";
  CHECK(CompressorConfig::load(path) == CompressorConfig{});
}
