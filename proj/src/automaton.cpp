#include "ccl/automaton.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccl {

namespace {

constexpr int kMaxColors = 10;
constexpr int kMaxStates = 64;

void require_kind(const RuleSpec& rule, MachineKind kind, const char* what) {
  if (rule.kind != kind) throw std::domain_error(std::string(what) + ": wrong machine kind");
}

}  // namespace

std::string to_string(MachineKind kind) {
  return kind == MachineKind::CellularAutomaton ? "ca" : "tm";
}

MachineKind parse_machine_kind(std::string_view text) {
  if (text == "ca") return MachineKind::CellularAutomaton;
  if (text == "tm") return MachineKind::TuringMachine;
  throw std::invalid_argument("unknown machine kind '" + std::string(text) + "' (expected ca|tm)");
}

BigUint ca_space_size(int colors) {
  const unsigned entries = static_cast<unsigned>(colors * colors * colors);
  return boost::multiprecision::pow(BigUint(colors), entries);
}

BigUint tm_space_size(int states, int colors) {
  const unsigned digits = static_cast<unsigned>(states * colors);
  return boost::multiprecision::pow(BigUint(2 * states * colors), digits);
}

RuleSpec RuleSpec::ca(int colors, BigUint number) {
  RuleSpec r{MachineKind::CellularAutomaton, colors, 1, std::move(number)};
  r.validate();
  return r;
}

RuleSpec RuleSpec::tm(int states, int colors, BigUint number) {
  RuleSpec r{MachineKind::TuringMachine, colors, states, std::move(number)};
  r.validate();
  return r;
}

BigUint RuleSpec::space_size() const {
  return kind == MachineKind::CellularAutomaton ? ca_space_size(colors) : tm_space_size(states, colors);
}

void RuleSpec::validate() const {
  if (colors < 2 || colors > kMaxColors) throw std::domain_error("colors must be in [2, 10]");
  if (kind == MachineKind::CellularAutomaton) {
    if (states != 1) throw std::domain_error("a CA rule has exactly one state");
  } else if (states < 1 || states > kMaxStates) {
    throw std::domain_error("states must be in [1, 64]");
  }
  if (number < 0 || number >= space_size()) {
    throw std::domain_error("rule number " + number.str() + " out of range for " + to_string(kind));
  }
}

std::string RuleSpec::label() const {
  if (kind == MachineKind::CellularAutomaton) {
    return "ca:k=" + std::to_string(colors) + ":" + number.str();
  }
  return "tm:s=" + std::to_string(states) + ":k=" + std::to_string(colors) + ":" + number.str();
}

bool operator<(const RuleSpec& a, const RuleSpec& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.colors != b.colors) return a.colors < b.colors;
  if (a.states != b.states) return a.states < b.states;
  return a.number < b.number;
}

SpaceTimeDiagram::SpaceTimeDiagram(std::size_t rows, std::size_t width, int colors)
    : rows_(rows), width_(width), colors_(colors), cells_(rows * width, 0) {}

SpaceTimeDiagram SpaceTimeDiagram::window(std::size_t rows, std::size_t column,
                                          std::size_t width) const {
  if (rows > rows_ || column + width > width_) throw std::out_of_range("diagram window out of range");
  SpaceTimeDiagram out(rows, width, colors_);
  for (std::size_t j = 0; j < rows; ++j) {
    auto src = row(j).subspan(column, width);
    std::copy(src.begin(), src.end(), out.row(j).begin());
  }
  return out;
}

CaRuleTable::CaRuleTable(const RuleSpec& rule) : colors_(rule.colors) {
  require_kind(rule, MachineKind::CellularAutomaton, "CaRuleTable");
  rule.validate();
  const std::size_t entries = static_cast<std::size_t>(colors_) * colors_ * colors_;
  table_.resize(entries);
  BigUint rest = rule.number;
  for (std::size_t i = 0; i < entries; ++i) {
    table_[i] = static_cast<Cell>(static_cast<unsigned>(rest % colors_));
    rest /= colors_;
  }
}

std::vector<Cell> ca_step(std::span<const Cell> row, const CaRuleTable& table, Cell background) {
  const std::size_t n = row.size();
  if (n < 3) throw std::domain_error("ca_step: row must have at least 3 cells");
  const int k = table.colors();
  if (background >= k) throw std::domain_error("ca_step: background out of color range");
  for (Cell c : row) {
    if (c >= k) throw std::domain_error("ca_step: cell value out of color range");
  }
  std::vector<Cell> next(n);
  next[0] = table(background, row[0], row[1]);
  for (std::size_t i = 1; i + 1 < n; ++i) next[i] = table(row[i - 1], row[i], row[i + 1]);
  next[n - 1] = table(row[n - 2], row[n - 1], background);
  return next;
}

std::vector<Cell> ca_step(std::span<const Cell> row, const RuleSpec& rule, Cell background) {
  require_kind(rule, MachineKind::CellularAutomaton, "ca_step");
  return ca_step(row, CaRuleTable(rule), background);
}

std::size_t diagram_width(std::size_t init_size, std::size_t steps) {
  return init_size + 2 * (steps + 1);
}

namespace {

void check_init(const InitialCondition& init, int colors) {
  if (init.cells.empty()) throw std::domain_error("initial condition must be non-empty");
  for (Cell c : init.cells) {
    if (c >= colors) throw std::domain_error("initial condition cell out of color range");
  }
}

}  // namespace

SpaceTimeDiagram evolve_ca_general(const RuleSpec& rule, const InitialCondition& init,
                                   std::size_t steps) {
  require_kind(rule, MachineKind::CellularAutomaton, "evolve_ca");
  const CaRuleTable table(rule);
  check_init(init, rule.colors);

  const std::size_t width = diagram_width(init.size(), steps);
  SpaceTimeDiagram d(steps + 1, width, rule.colors);
  std::copy(init.cells.begin(), init.cells.end(), d.row(0).begin() + static_cast<std::ptrdiff_t>(steps + 1));

  Cell background = 0;
  for (std::size_t j = 0; j < steps; ++j) {
    auto cur = d.row(j);
    auto next = d.row(j + 1);
    next[0] = table(background, cur[0], cur[1]);
    for (std::size_t i = 1; i + 1 < width; ++i) next[i] = table(cur[i - 1], cur[i], cur[i + 1]);
    next[width - 1] = table(cur[width - 2], cur[width - 1], background);
    background = table(background, background, background);
  }
  return d;
}

SpaceTimeDiagram evolve_eca_packed(const RuleSpec& rule, const InitialCondition& init,
                                   std::size_t steps) {
  require_kind(rule, MachineKind::CellularAutomaton, "evolve_eca_packed");
  if (rule.colors != 2) throw std::domain_error("evolve_eca_packed: elementary rules only");
  rule.validate();
  check_init(init, 2);
  const auto code = static_cast<unsigned>(rule.number);

  const std::size_t width = diagram_width(init.size(), steps);
  const std::size_t words = (width + 63) / 64;
  const unsigned tail = static_cast<unsigned>(width % 64);
  const std::uint64_t tail_mask = tail == 0 ? ~0ULL : (~0ULL << tail);

  std::vector<std::uint64_t> cur(words, 0), next(words, 0);
  for (std::size_t i = 0; i < init.size(); ++i) {
    if (init.cells[i]) {
      const std::size_t pos = steps + 1 + i;
      cur[pos / 64] |= 1ULL << (pos % 64);
    }
  }

  SpaceTimeDiagram d(steps + 1, width, 2);
  auto unpack = [&](std::size_t j) {
    auto out = d.row(j);
    for (std::size_t i = 0; i < width; ++i) out[i] = static_cast<Cell>((cur[i / 64] >> (i % 64)) & 1U);
  };
  unpack(0);

  unsigned background = 0;
  for (std::size_t j = 0; j < steps; ++j) {
    const std::uint64_t bg_word = background ? ~0ULL : 0ULL;
    // Bits past the right edge read as background.
    cur[words - 1] = (cur[words - 1] & ~tail_mask) | (bg_word & tail_mask);
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t c = cur[w];
      const std::uint64_t carry_in = w == 0 ? (bg_word >> 63) : (cur[w - 1] >> 63);
      const std::uint64_t carry_hi = w + 1 == words ? (bg_word << 63) : (cur[w + 1] << 63);
      const std::uint64_t left = (c << 1) | carry_in;    // bit i holds cell i-1
      const std::uint64_t right = (c >> 1) | carry_hi;  // bit i holds cell i+1
      std::uint64_t out = 0;
      for (unsigned p = 0; p < 8; ++p) {
        if (!((code >> p) & 1U)) continue;
        const std::uint64_t l = (p & 4U) ? left : ~left;
        const std::uint64_t m = (p & 2U) ? c : ~c;
        const std::uint64_t r = (p & 1U) ? right : ~right;
        out |= l & m & r;
      }
      next[w] = out;
    }
    std::swap(cur, next);
    background = (code >> (background ? 7U : 0U)) & 1U;
    unpack(j + 1);
  }
  return d;
}

SpaceTimeDiagram evolve_ca(const RuleSpec& rule, const InitialCondition& init, std::size_t steps) {
  require_kind(rule, MachineKind::CellularAutomaton, "evolve_ca");
  if (rule.colors == 2) return evolve_eca_packed(rule, init, steps);
  return evolve_ca_general(rule, init, steps);
}

// ---------------------------------------------------------------------------

TmRuleTable::TmRuleTable(const RuleSpec& rule) : states_(rule.states), colors_(rule.colors) {
  require_kind(rule, MachineKind::TuringMachine, "TmRuleTable");
  rule.validate();
  const int base = 2 * states_ * colors_;
  const std::size_t digits = static_cast<std::size_t>(states_) * colors_;
  actions_.resize(digits);
  BigUint rest = rule.number;
  // Least significant digit belongs to the last (state, color) pair.
  for (std::size_t i = digits; i-- > 0;) {
    const int d = static_cast<int>(static_cast<unsigned>(rest % base));
    rest /= base;
    const int r = d % (2 * colors_);
    actions_[i] = TmAction{d / (2 * colors_), static_cast<Cell>(r / 2), r % 2 == 0 ? +1 : -1};
  }
}

BigUint encode_tm_rule(int states, int colors, std::span<const TmAction> actions) {
  const std::size_t digits = static_cast<std::size_t>(states) * colors;
  if (actions.size() != digits) throw std::domain_error("encode_tm_rule: need one action per (state, color)");
  const int base = 2 * states * colors;
  BigUint number = 0;
  for (const auto& a : actions) {
    if (a.new_state < 0 || a.new_state >= states || a.new_color >= colors || (a.move != 1 && a.move != -1)) {
      throw std::domain_error("encode_tm_rule: action out of range");
    }
    const int d = a.new_state * 2 * colors + a.new_color * 2 + (a.move == 1 ? 0 : 1);
    number = number * base + d;
  }
  return number;
}

void TmConfiguration::write(std::int64_t pos, Cell value) {
  if (value == 0) {
    tape.erase(pos);
  } else {
    tape[pos] = value;
  }
}

TmConfiguration tm_step(const TmConfiguration& cfg, const TmRuleTable& table) {
  if (cfg.state < 0 || cfg.state >= table.states()) throw std::domain_error("tm_step: state out of range");
  const Cell color = cfg.read(cfg.head);
  if (color >= table.colors()) throw std::domain_error("tm_step: tape color out of range");
  const TmAction& a = table.action(cfg.state, color);
  TmConfiguration next = cfg;
  next.write(cfg.head, a.new_color);
  next.head += a.move;
  next.state = a.new_state;
  return next;
}

TmConfiguration tm_step(const TmConfiguration& cfg, const RuleSpec& rule) {
  return tm_step(cfg, TmRuleTable(rule));
}

std::vector<Cell> reached_states_sequence(const RuleSpec& rule, std::size_t steps, StateSequenceMode mode) {
  const TmRuleTable table(rule);
  // Dense tape; the head moves at most `steps` cells either way.
  std::vector<Cell> tape(2 * steps + 1, 0);
  std::size_t head = steps;
  int state = 0;
  std::uint64_t visited = 1;  // bit per state
  int distinct = 1;

  std::vector<Cell> out;
  out.reserve(steps + 1);
  out.push_back(mode == StateSequenceMode::DistinctCount ? Cell{1} : Cell{0});
  for (std::size_t j = 0; j < steps; ++j) {
    const TmAction& a = table.action(state, tape[head]);
    tape[head] = a.new_color;
    head = a.move > 0 ? head + 1 : head - 1;
    state = a.new_state;
    if (!((visited >> state) & 1U)) {
      visited |= 1ULL << state;
      ++distinct;
    }
    out.push_back(static_cast<Cell>(mode == StateSequenceMode::DistinctCount ? distinct : state));
  }
  return out;
}

}  // namespace ccl
