#include <doctest.h>

#include <random>

#include "ccl/initcond.hpp"
#include "oracles.hpp"

using namespace ccl;
using Bits = std::vector<Cell>;

TEST_CASE("gray_derivate known codewords") {
  CHECK(gray_derivate(0) == Bits{0});
  CHECK(gray_derivate(1) == Bits{1});
  CHECK(gray_derivate(2) == Bits{1, 1});
  CHECK(gray_derivate(3) == Bits{1, 0});
  CHECK(gray_derivate(10) == Bits{1, 1, 1, 1});
}

TEST_CASE("gray_integrate inverts the first eleven codewords") {
  for (std::uint64_t n = 0; n <= 10; ++n) CHECK(gray_integrate(gray_derivate(n)) == n);
  CHECK(gray_integrate(Bits{0}) == 0);
  CHECK(gray_integrate(Bits{1, 0}) == 3);
}

TEST_CASE("gray_integrate rejects malformed input") {
  CHECK_THROWS_AS(gray_integrate(Bits{}), std::domain_error);
  CHECK_THROWS_AS(gray_integrate(Bits{1, 2}), std::domain_error);
  Bits too_long(65, 0);
  too_long[0] = 1;
  CHECK_THROWS_AS(gray_integrate(too_long), std::domain_error);
  Bits padded(70, 0);
  padded.back() = 1;  // leading zeros do not count toward the 64-bit limit
  CHECK(gray_integrate(padded) == 1);
}

TEST_CASE("gray code round trip and adjacency over the low range") {
  for (std::uint64_t n = 0; n < (1u << 16); ++n) REQUIRE(gray_integrate(gray_derivate(n)) == n);
  for (std::uint64_t n = 0; n + 1 < (1u << 12); ++n) {
    const auto a = gray_derivate(n);
    const auto b = gray_derivate(n + 1);
    auto [pa, pb] = pad_to_common_length(a, b);
    REQUIRE(damerau_levenshtein(pa, pb) == 1);
  }
}

TEST_CASE("gray code round trip near the top of the 64-bit range") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng();
    REQUIRE(gray_integrate(gray_derivate(n)) == n);
  }
  CHECK(gray_integrate(gray_derivate(~0ull)) == ~0ull);
}

TEST_CASE("initial_condition numbering") {
  CHECK(initial_condition(0).cells == Bits{1});
  CHECK(initial_condition(1).cells == Bits{1, 1});
  CHECK(initial_condition(2).cells == Bits{1, 1, 1});
  CHECK(initial_condition_number(initial_condition(32)) == 32);
  CHECK(initial_condition_number(InitialCondition{{1, 1}}) == 1);
  CHECK(initial_condition_number(InitialCondition{}) == 0);
  for (std::uint64_t n = 0; n < 5000; ++n) REQUIRE(initial_condition_number(initial_condition(n)) == n);
}

TEST_CASE("initial_condition_number rejects configurations outside the numbering") {
  CHECK_THROWS_AS(InitialCondition(Bits{}), std::domain_error);
  CHECK_THROWS_AS(initial_condition_number(InitialCondition{{1, 0}}), std::domain_error);
  CHECK_THROWS_AS(initial_condition_number(InitialCondition{{0}}), std::domain_error);
  CHECK_THROWS_AS(initial_condition_number(InitialCondition{{2, 1}}), std::domain_error);
  CHECK_THROWS_AS(initial_condition_number(InitialCondition{{0, 1, 1}}), std::domain_error);
}

TEST_CASE("distinct numbers give distinct configurations") {
  std::set<Bits> seen;
  for (std::uint64_t n = 0; n < 4096; ++n) REQUIRE(seen.insert(initial_condition(n).cells).second);
}

TEST_CASE("damerau_levenshtein small cases") {
  const Bits u{1, 0, 1};
  CHECK(damerau_levenshtein(u, u) == 0);
  CHECK(damerau_levenshtein(Bits{0, 1}, Bits{1, 0}) == 1);
  CHECK(damerau_levenshtein(Bits{}, Bits{1, 1, 1}) == 3);
  CHECK(damerau_levenshtein(Bits{1, 1}, Bits{}) == 2);
  // optimal string alignment does not edit a transposed pair again
  CHECK(damerau_levenshtein(std::vector<char>{'c', 'a'}, std::vector<char>{'a', 'b', 'c'}) == 3);
}

TEST_CASE("damerau_levenshtein agrees with exhaustive edit search on short strings") {
  std::vector<std::vector<int>> words{{}};
  for (int a = 0; a < 3; ++a) {
    words.push_back({a});
    for (int b = 0; b < 3; ++b) words.push_back({a, b});
  }
  for (const auto& x : words) {
    for (const auto& y : words) {
      const auto expected = oracle::edit_distance_bfs(x, y, 3, 4);
      REQUIRE(static_cast<int>(damerau_levenshtein(x, y)) == expected);
    }
  }
}

TEST_CASE("damerau_levenshtein is a symmetric distance on random words") {
  std::mt19937 rng(11);
  auto word = [&] {
    Bits w(rng() % 9);
    for (auto& c : w) c = static_cast<Cell>(rng() % 3);
    return w;
  };
  for (int i = 0; i < 500; ++i) {
    const auto a = word(), b = word();
    const auto d = damerau_levenshtein(a, b);
    REQUIRE(d == damerau_levenshtein(b, a));
    REQUIRE(d <= std::max(a.size(), b.size()));
    REQUIRE(d >= (a.size() > b.size() ? a.size() - b.size() : b.size() - a.size()));
    REQUIRE((d == 0) == (a == b));
  }
}

TEST_CASE("pad_to_common_length pads on the left") {
  auto [a, b] = pad_to_common_length(Bits{1}, Bits{1, 0, 1});
  CHECK(a == Bits{0, 0, 1});
  CHECK(b == Bits{1, 0, 1});
}
