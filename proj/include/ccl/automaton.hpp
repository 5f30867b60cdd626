#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ccl/initcond.hpp"

namespace ccl {

using BigUint = boost::multiprecision::cpp_int;

enum class MachineKind { CellularAutomaton, TuringMachine };

std::string to_string(MachineKind kind);
MachineKind parse_machine_kind(std::string_view text);

/// Identifies one machine of a rule space: a radius-1 k-color CA or an
/// s-state k-color Turing machine, each indexed by its rule number.
struct RuleSpec {
  MachineKind kind = MachineKind::CellularAutomaton;
  int colors = 2;
  int states = 1;
  BigUint number = 0;

  static RuleSpec ca(int colors, BigUint number);
  static RuleSpec eca(unsigned number) { return ca(2, number); }
  static RuleSpec tm(int states, int colors, BigUint number);

  /// Number of distinct rule numbers of this kind/colors/states:
  /// k^(k^3) for CAs, (2sk)^(sk) for TMs.
  BigUint space_size() const;

  /// Throws std::domain_error when the parameters or the number are out of range.
  void validate() const;

  /// "ca:k=2:30" / "tm:s=2:k=3:12345".
  std::string label() const;

  friend bool operator==(const RuleSpec& a, const RuleSpec& b) {
    return a.kind == b.kind && a.colors == b.colors && a.states == b.states && a.number == b.number;
  }
  friend bool operator<(const RuleSpec& a, const RuleSpec& b);
};

BigUint ca_space_size(int colors);
BigUint tm_space_size(int states, int colors);

/// Dense row-major grid of cell values; row j is the configuration at time j.
class SpaceTimeDiagram {
 public:
  SpaceTimeDiagram() = default;
  SpaceTimeDiagram(std::size_t rows, std::size_t width, int colors);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t width() const noexcept { return width_; }
  int colors() const noexcept { return colors_; }

  std::span<const Cell> row(std::size_t j) const { return {cells_.data() + j * width_, width_}; }
  std::span<Cell> row(std::size_t j) { return {cells_.data() + j * width_, width_}; }
  Cell at(std::size_t j, std::size_t i) const { return cells_[j * width_ + i]; }
  std::span<const Cell> cells() const noexcept { return cells_; }

  /// Rows [0, rows) and columns [column, column + width) as a new diagram.
  SpaceTimeDiagram window(std::size_t rows, std::size_t column, std::size_t width) const;

  friend bool operator==(const SpaceTimeDiagram&, const SpaceTimeDiagram&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t width_ = 0;
  int colors_ = 2;
  std::vector<Cell> cells_;
};

/// Rule table of a radius-1 CA, compiled from its rule number. Entry index is
/// the neighborhood (left, center, right) read as a base-k number; the entry
/// is the corresponding base-k digit of the rule number (least significant
/// digit is neighborhood 0).
class CaRuleTable {
 public:
  explicit CaRuleTable(const RuleSpec& rule);

  int colors() const noexcept { return colors_; }
  Cell operator()(Cell left, Cell center, Cell right) const {
    return table_[(static_cast<std::size_t>(left) * colors_ + center) * colors_ + right];
  }
  std::span<const Cell> entries() const noexcept { return table_; }

 private:
  int colors_;
  std::vector<Cell> table_;
};

/// One CA update of `row`; cells outside the row read as `background`.
/// Throws std::domain_error for a non-CA rule, an out-of-range rule number,
/// a cell value >= k, or a row shorter than 3 cells.
std::vector<Cell> ca_step(std::span<const Cell> row, const RuleSpec& rule, Cell background = 0);
std::vector<Cell> ca_step(std::span<const Cell> row, const CaRuleTable& table, Cell background = 0);

/// Width of the diagram evolve_ca produces: |init| + 2(steps+1).
std::size_t diagram_width(std::size_t init_size, std::size_t steps);

/// Evolves `init` (centered on a zero background) for `steps` steps.
///
/// The diagram has steps+1 rows and width |init| + 2(steps+1), wide enough
/// that the light cone of the initial condition never reaches the edges.
/// The background outside the window is tracked exactly (it evolves as
/// f(b, b, b)), so every row equals the corresponding window of the
/// evolution on an infinite lattice. For k = 2 this uses the bit-parallel
/// elementary path.
SpaceTimeDiagram evolve_ca(const RuleSpec& rule, const InitialCondition& init, std::size_t steps);

/// Cell-at-a-time table lookup for any k; reference path for evolve_ca.
SpaceTimeDiagram evolve_ca_general(const RuleSpec& rule, const InitialCondition& init,
                                   std::size_t steps);

/// Bit-parallel path for elementary (k = 2) rules, 64 cells per word.
SpaceTimeDiagram evolve_eca_packed(const RuleSpec& rule, const InitialCondition& init,
                                   std::size_t steps);

// ---------------------------------------------------------------------------
// Turing machines

struct TmAction {
  int new_state = 0;
  Cell new_color = 0;
  int move = +1;  // +1 right, -1 left
  friend bool operator==(const TmAction&, const TmAction&) = default;
};

/// Decoded transition table. The rule number written in base 2sk has sk
/// digits; digit state*k + color (most significant first) encodes the
/// action: new_state = d / 2k, r = d % 2k, new_color = r / 2, move = +1 if r
/// is even, else -1.
class TmRuleTable {
 public:
  explicit TmRuleTable(const RuleSpec& rule);

  int states() const noexcept { return states_; }
  int colors() const noexcept { return colors_; }
  const TmAction& action(int state, Cell color) const {
    return actions_[static_cast<std::size_t>(state) * colors_ + color];
  }

 private:
  int states_;
  int colors_;
  std::vector<TmAction> actions_;
};

/// Inverse of the TmRuleTable decoding; used to construct specific machines.
BigUint encode_tm_rule(int states, int colors, std::span<const TmAction> actions);

struct TmConfiguration {
  std::map<std::int64_t, Cell> tape;  // only nonzero cells are stored
  std::int64_t head = 0;
  int state = 0;

  Cell read(std::int64_t pos) const {
    auto it = tape.find(pos);
    return it == tape.end() ? Cell{0} : it->second;
  }
  void write(std::int64_t pos, Cell value);

  friend bool operator==(const TmConfiguration&, const TmConfiguration&) = default;
};

TmConfiguration tm_step(const TmConfiguration& cfg, const RuleSpec& rule);
TmConfiguration tm_step(const TmConfiguration& cfg, const TmRuleTable& table);

enum class StateSequenceMode {
  DistinctCount,  // element j = number of distinct states visited in steps 0..j
  StateAtStep,    // element j = machine state after j steps
};

/// Runs the machine from a blank tape (head 0, state 0) for `steps` steps
/// and returns the length-(steps+1) state sequence selected by `mode`.
std::vector<Cell> reached_states_sequence(const RuleSpec& rule, std::size_t steps,
                                          StateSequenceMode mode = StateSequenceMode::DistinctCount);

}  // namespace ccl
