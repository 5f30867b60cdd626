#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>

#include "ccl/parallel.hpp"
#include "ccl/report.hpp"
#include "ccl/svg.hpp"

using namespace ccl;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("format_double round-trips") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = d(rng);
    REQUIRE(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-2) == "-2");
}

TEST_CASE("classification CSV and JSON") {
  std::vector<RuleSpec> rules{RuleSpec::eca(30), RuleSpec::eca(0), RuleSpec::eca(90)};
  auto report = rank_rules(rules, InitialCondition{}, 40);
  assign_clusters(report, 2);
  const auto csv = lines(classification_csv(report));
  REQUIRE(csv.size() == 4);
  CHECK(csv[0] == "rule,kind,colors,c_raw,c_compressed,cluster");
  CHECK(csv[1].rfind("0,ca,2,", 0) == 0);
  CHECK(classification_csv(report).find('\r') == std::string::npos);

  const auto j = classification_json(report);
  CHECK(j["parameters"]["steps"] == 40);
  CHECK(j["parameters"]["compressor"]["id"] == "deflate-raw-l6-w15-m8-default");
  CHECK(j["parameters"]["compressor"]["unit"] == "bytes");
  CHECK(j["entries"].size() == 3);
  CHECK(j["entries"][2]["rule"] == "30");
}

TEST_CASE("big rule numbers are serialized as decimal strings") {
  const auto rule = RuleSpec::ca(3, BigUint("7625597484986"));
  CHECK(rule_json(rule)["rule"] == "7625597484986");
  CHECK(rules_csv({rule}) == "rule,kind,colors,states\n7625597484986,ca,3,1\n");
}

TEST_CASE("coefficient and profile tables") {
  TransitionRecord rec;
  rec.rule = RuleSpec::eca(22);
  rec.sequence = {1.0, 2.5, 4.0};
  rec.fit = least_squares_fit(rec.sequence);
  rec.coefficient = rec.fit.slope;
  const auto csv = lines(coefficients_csv({{rec, 1}}));
  CHECK(csv[0] == "rank,rule,kind,colors,coefficient,intercept,cluster,s_1,s_2,s_3");
  CHECK(csv[1] == "1,22,ca,2,1.5,-0.5,1,1,2.5,4");

  IcProfile p{RuleSpec::eca(22), 10, true, {10, 10, 10, 90, 10}};
  const auto pcsv = lines(profiles_csv({p}, 3.0));
  CHECK(pcsv[0] == "rule,ic,compressed_length,value,spike");
  CHECK(pcsv[4] == "22,3,90,9,1");
  CHECK(pcsv[5] == "22,4,10,1,0");
  CHECK(profile_json(p, 3.0)["spikes"] == nlohmann::json::array({3}));
}

TEST_CASE("svg output is deterministic and well formed") {
  svg::Plot plot{"title & <more>", "x", "y", {}};
  plot.series.push_back({"a", {{0, 1}, {1, 3}, {2, 2}}, svg::SeriesStyle::LineAndMarkers, svg::palette(0)});
  plot.series.push_back({"b", {{0.5, 2}}, svg::SeriesStyle::Markers, svg::palette(1)});
  const auto a = svg::render(plot);
  CHECK(a == svg::render(plot));
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("title &amp; &lt;more&gt;") != std::string::npos);
  CHECK(a.find("width=\"800\"") != std::string::npos);
  CHECK(svg::render({"empty", "x", "y", {}}).find("</svg>") != std::string::npos);
}

TEST_CASE("parallel_for visits every index once") {
  for (unsigned threads : {1u, 2u, 7u}) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i]++; });
    for (auto& h : hits) REQUIRE(h == 1);
  }
  parallel_for(0, 4, [](std::size_t) { FAIL("no work expected"); });
  const auto squares = parallel_map<int>(50, 3, [](std::size_t i) { return int(i * i); });
  CHECK(squares[49] == 49 * 49);
}

TEST_CASE("parallel_for rethrows worker exceptions") {
  CHECK_THROWS_AS(parallel_for(100, 3,
                               [](std::size_t i) {
                                 if (i == 42) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}

TEST_CASE("thread count resolution") {
  CHECK(resolve_thread_count(3) == 3);
  CHECK(resolve_thread_count(0) == 1);
  ::setenv("CCL_THREADS", "5", 1);
  CHECK(resolve_thread_count() == 5);
  ::setenv("CCL_THREADS", "junk", 1);
  CHECK(resolve_thread_count() == 1);
  ::unsetenv("CCL_THREADS");
  CHECK(resolve_thread_count() == 1);
}
