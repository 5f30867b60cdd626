#include <doctest.h>

#include <random>

#include "ccl/automaton.hpp"
#include "oracles.hpp"

using namespace ccl;
using Row = std::vector<Cell>;

namespace {

std::vector<std::vector<int>> as_rows(const SpaceTimeDiagram& d) {
  std::vector<std::vector<int>> out;
  for (std::size_t j = 0; j < d.rows(); ++j) out.emplace_back(d.row(j).begin(), d.row(j).end());
  return out;
}

std::vector<int> as_ints(const InitialCondition& ic) { return {ic.cells.begin(), ic.cells.end()}; }

TmAction act(int state, int color, int move) { return {state, static_cast<Cell>(color), move}; }

}  // namespace

TEST_CASE("ca_step on hand-checked rows") {
  const Row single{0, 0, 0, 1, 0, 0, 0};
  CHECK(ca_step(single, RuleSpec::eca(0)) == Row(7, 0));
  CHECK(ca_step(single, RuleSpec::eca(30)) == Row{0, 0, 1, 1, 1, 0, 0});
  const Row mixed{1, 0, 1, 1, 0, 0, 1, 0};
  CHECK(ca_step(mixed, RuleSpec::eca(204)) == mixed);
  // rule 255 with background 1 keeps everything on
  CHECK(ca_step(Row{1, 1, 1}, RuleSpec::eca(255), 1) == Row{1, 1, 1});
}

TEST_CASE("ca_step errors") {
  CHECK_THROWS_AS(ca_step(Row{0, 2, 0}, RuleSpec::eca(30)), std::domain_error);
  CHECK_THROWS_AS(ca_step(Row{0, 1}, RuleSpec::eca(30)), std::domain_error);
  CHECK_THROWS_AS(ca_step(Row{0, 1, 0}, RuleSpec::ca(2, 256)), std::domain_error);
  CHECK_THROWS_AS(ca_step(Row{0, 1, 0}, RuleSpec::tm(2, 3, 0)), std::domain_error);
}

TEST_CASE("rule spaces") {
  CHECK(ca_space_size(2) == 256);
  CHECK(ca_space_size(3) == BigUint("7625597484987"));
  CHECK(tm_space_size(2, 3) == 2985984);
  CHECK(RuleSpec::tm(2, 3, 0).space_size() == 2985984);
  CHECK_NOTHROW(RuleSpec::ca(3, BigUint("7625597484986")).validate());
  CHECK_THROWS_AS(RuleSpec::ca(3, BigUint("7625597484987")).validate(), std::domain_error);
  CHECK_THROWS_AS(RuleSpec::ca(1, 0).validate(), std::domain_error);
  CHECK_THROWS_AS(RuleSpec::ca(11, 0).validate(), std::domain_error);
  CHECK_THROWS_AS(RuleSpec::tm(2, 3, 2985984).validate(), std::domain_error);
  CHECK(RuleSpec::eca(30).label() == "ca:k=2:30");
  CHECK(RuleSpec::tm(2, 3, 12345).label() == "tm:s=2:k=3:12345");
  CHECK(parse_machine_kind(to_string(MachineKind::TuringMachine)) == MachineKind::TuringMachine);
  CHECK_THROWS_AS(parse_machine_kind("xyz"), std::invalid_argument);
}

TEST_CASE("evolution examples") {
  SUBCASE("rule 0 dies after the first row") {
    const auto d = evolve_ca(RuleSpec::eca(0), InitialCondition{}, 5);
    CHECK(d.rows() == 6);
    CHECK(std::count(d.row(0).begin(), d.row(0).end(), 1) == 1);
    for (std::size_t j = 1; j < 6; ++j) CHECK(std::count(d.row(j).begin(), d.row(j).end(), 0) == long(d.width()));
  }
  SUBCASE("rule 254 grows a centered triangle") {
    const std::size_t t = 20;
    const auto d = evolve_ca(RuleSpec::eca(254), InitialCondition{}, t);
    const std::size_t centre = t + 1;
    for (std::size_t j = 0; j <= t; ++j) {
      CHECK(std::count(d.row(j).begin(), d.row(j).end(), 1) == long(2 * j + 1));
      CHECK(d.at(j, centre - j) == 1);
      CHECK(d.at(j, centre + j) == 1);
    }
  }
  SUBCASE("rule 90 is Pascal's triangle mod 2") {
    const std::size_t t = 4;
    const auto d = evolve_ca(RuleSpec::eca(90), InitialCondition{}, t);
    for (std::size_t j = 0; j <= t; ++j) {
      for (std::size_t i = 0; i < d.width(); ++i) {
        const long off = long(i) - long(t + 1) + long(j);  // 0..2j across the cone
        int expected = 0;
        if (off >= 0 && off <= long(2 * j) && off % 2 == 0) {
          const long r = off / 2;  // binomial(j, r) mod 2
          expected = (r & long(j)) == r ? 1 : 0;
        }
        CHECK(d.at(j, i) == expected);
      }
    }
  }
}

TEST_CASE("diagram geometry") {
  const auto init = initial_condition(9);
  const auto d = evolve_ca(RuleSpec::eca(30), init, 17);
  CHECK(d.rows() == 18);
  CHECK(d.width() == diagram_width(init.size(), 17));
  CHECK(d.width() == init.size() + 36);
  for (std::size_t i = 0; i < init.size(); ++i) CHECK(d.at(0, 18 + i) == init.cells[i]);
}

TEST_CASE("every elementary rule matches the brute-force lattice oracle") {
  for (unsigned rule = 0; rule < 256; ++rule) {
    for (std::uint64_t ic : {0u, 5u, 37u}) {
      const auto init = initial_condition(ic);
      const auto d = evolve_ca(RuleSpec::eca(rule), init, 40);
      REQUIRE_MESSAGE(as_rows(d) == oracle::evolve(rule, 2, as_ints(init), 40), "rule " << rule << " ic " << ic);
    }
  }
}

TEST_CASE("bit-parallel and table paths agree on all elementary rules") {
  for (unsigned rule = 0; rule < 256; ++rule) {
    for (std::uint64_t ic : {0u, 1u, 200u}) {
      const auto init = initial_condition(ic);
      REQUIRE(evolve_eca_packed(RuleSpec::eca(rule), init, 50) == evolve_ca_general(RuleSpec::eca(rule), init, 50));
    }
  }
}

TEST_CASE("random three-color rules match the oracle") {
  std::mt19937_64 rng(3);
  const std::uint64_t space = 7625597484987ull;
  for (int i = 0; i < 60; ++i) {
    const std::uint64_t rule = rng() % space;
    InitialCondition init{Row{static_cast<Cell>(rng() % 3), 2, static_cast<Cell>(rng() % 3)}};
    const auto d = evolve_ca(RuleSpec::ca(3, rule), init, 30);
    REQUIRE(as_rows(d) == oracle::evolve(rule, 3, as_ints(init), 30));
  }
  CHECK(evolve_ca(RuleSpec::ca(3, 0), InitialCondition::single_cell(2), 3).at(0, 4) == 2);
}

TEST_CASE("light cone: quiescent rules stay zero outside the cone") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const unsigned rule = static_cast<unsigned>(rng() % 128) * 2;  // f(0,0,0) = 0
    const auto init = initial_condition(rng() % 1000);
    const std::size_t t = 1 + rng() % 60;
    const auto d = evolve_ca(RuleSpec::eca(rule), init, t);
    const long lo = long(t + 1), hi = long(t + init.size());  // occupied columns at time 0
    for (std::size_t j = 0; j <= t; ++j) {
      for (std::size_t c = 0; c < d.width(); ++c) {
        if (long(c) < lo - long(j) || long(c) > hi + long(j)) REQUIRE(d.at(j, c) == 0);
      }
    }
  }
}

TEST_CASE("background of odd rules alternates like the infinite lattice") {
  // rule 1 maps 000 to 1 and 111 to 0, so the far field blinks
  const auto d = evolve_ca(RuleSpec::eca(1), InitialCondition{}, 6);
  for (std::size_t j = 0; j <= 6; ++j) {
    CHECK(d.at(j, 0) == j % 2);
    CHECK(d.at(j, d.width() - 1) == j % 2);
  }
}

TEST_CASE("window crops rows and columns") {
  const auto d = evolve_ca(RuleSpec::eca(30), InitialCondition{}, 10);
  const auto w = d.window(4, 3, 5);
  CHECK(w.rows() == 4);
  CHECK(w.width() == 5);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 5; ++i) CHECK(w.at(j, i) == d.at(j, 3 + i));
}

TEST_CASE("longer runs contain shorter ones as windows") {
  const auto init = initial_condition(12);
  const auto long_run = evolve_ca(RuleSpec::eca(110), init, 90);
  const auto short_run = evolve_ca(RuleSpec::eca(110), init, 30);
  CHECK(long_run.window(31, 60, short_run.width()) == short_run);
}

TEST_CASE("CA rule table digits") {
  const CaRuleTable t(RuleSpec::eca(30));
  CHECK(t(0, 0, 1) == 1);
  CHECK(t(1, 0, 0) == 1);
  CHECK(t(1, 1, 1) == 0);
  const CaRuleTable t3(RuleSpec::ca(3, 5));  // digits 2, 1, 0, ... in base 3
  CHECK(t3(0, 0, 0) == 2);
  CHECK(t3(0, 0, 1) == 1);
  CHECK(t3(0, 0, 2) == 0);
}

TEST_CASE("TM decoding and stepping") {
  SUBCASE("rule 0 writes 0, moves right and stays in state 0") {
    TmConfiguration cfg;
    const RuleSpec rule = RuleSpec::tm(2, 3, 0);
    for (int i = 1; i <= 5; ++i) {
      cfg = tm_step(cfg, rule);
      CHECK(cfg.head == i);
      CHECK(cfg.state == 0);
    }
    CHECK(cfg.tape.empty());
  }
  SUBCASE("zero steps leave the configuration unchanged") {
    const auto seq = reached_states_sequence(RuleSpec::tm(2, 3, 777), 0);
    CHECK(seq == Row{1});
  }
  SUBCASE("digit layout") {
    // 2 states, 2 colors: base 8, four digits; most significant = (state 0, color 0)
    std::vector<TmAction> actions{act(1, 1, -1), act(0, 1, +1), act(1, 0, +1), act(0, 0, -1)};
    const BigUint n = encode_tm_rule(2, 2, actions);
    // digits: 1*4+1*2+1 = 7, 0*4+1*2+0 = 2, 1*4+0+0 = 4, 0+0+1 = 1
    CHECK(n == 7 * 512 + 2 * 64 + 4 * 8 + 1);
    const TmRuleTable table(RuleSpec::tm(2, 2, n));
    CHECK(table.action(0, 0) == actions[0]);
    CHECK(table.action(0, 1) == actions[1]);
    CHECK(table.action(1, 0) == actions[2]);
    CHECK(table.action(1, 1) == actions[3]);
  }
  SUBCASE("write then move") {
    std::vector<TmAction> actions{act(1, 2, -1), act(0, 0, +1), act(0, 0, +1),
                                  act(1, 1, +1), act(1, 1, +1), act(1, 1, +1)};
    const auto rule = RuleSpec::tm(2, 3, encode_tm_rule(2, 3, actions));
    const auto next = tm_step(TmConfiguration{}, rule);
    CHECK(next.head == -1);
    CHECK(next.state == 1);
    CHECK(next.read(0) == 2);
  }
}

TEST_CASE("encode_tm_rule inverts the decoding on random machines") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const int s = 1 + int(rng() % 4), k = 2 + int(rng() % 3);
    std::vector<TmAction> actions;
    for (int j = 0; j < s * k; ++j) actions.push_back(act(int(rng() % s), int(rng() % k), rng() % 2 ? 1 : -1));
    const BigUint n = encode_tm_rule(s, k, actions);
    REQUIRE(n < tm_space_size(s, k));
    const TmRuleTable table(RuleSpec::tm(s, k, n));
    for (int st = 0; st < s; ++st)
      for (int c = 0; c < k; ++c) REQUIRE(table.action(st, Cell(c)) == actions[std::size_t(st * k + c)]);
  }
}

TEST_CASE("reached-state sequences") {
  SUBCASE("never switching") {
    const auto seq = reached_states_sequence(RuleSpec::tm(2, 3, 0), 50);
    CHECK(seq == Row(51, 1));
  }
  SUBCASE("switches once on the first step") {
    std::vector<TmAction> actions(6, act(1, 0, +1));
    const auto rule = RuleSpec::tm(2, 3, encode_tm_rule(2, 3, actions));
    const auto seq = reached_states_sequence(rule, 5);
    CHECK(seq == Row{1, 2, 2, 2, 2, 2});
    CHECK(reached_states_sequence(rule, 5, StateSequenceMode::StateAtStep) == Row{0, 1, 1, 1, 1, 1});
  }
  SUBCASE("distinct counts agree with replayed states") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
      const auto rule = RuleSpec::tm(3, 2, BigUint(rng() % 2985984));
      const auto counts = reached_states_sequence(rule, 80);
      const auto states = reached_states_sequence(rule, 80, StateSequenceMode::StateAtStep);
      std::set<int> seen;
      TmConfiguration cfg;
      for (std::size_t j = 0; j <= 80; ++j) {
        REQUIRE(states[j] == cfg.state);
        seen.insert(cfg.state);
        REQUIRE(counts[j] == seen.size());
        cfg = tm_step(cfg, rule);
      }
    }
  }
}
