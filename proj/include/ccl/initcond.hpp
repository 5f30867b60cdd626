#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace ccl {

using Cell = std::uint8_t;

/// Finite, non-empty configuration placed on an all-zero background.
///
/// ICs produced by the Gray numbering always end in a 1 so that two
/// different numbers never describe the same configuration once padded
/// with zeros. Arbitrary cells (e.g. a single cell of color 2) are also
/// accepted by the automaton module; only `initial_condition_number`
/// insists on the numbering-scheme shape.
struct InitialCondition {
  std::vector<Cell> cells;

  InitialCondition() : cells{1} {}
  explicit InitialCondition(std::vector<Cell> c);

  static InitialCondition single_cell(Cell color = 1) { return InitialCondition{{color}}; }

  std::size_t size() const noexcept { return cells.size(); }
  friend bool operator==(const InitialCondition&, const InitialCondition&) = default;
};

// Gray-code numbering of binary initial conditions.

/// Binary digits of n (most significant first); output bit i>0 is the XOR
/// of digits i-1 and i. {0} for n == 0.
std::vector<Cell> gray_derivate(std::uint64_t n);

/// Inverse of gray_derivate: prefix-XOR of the bits read as a binary number.
/// Throws std::domain_error on an empty input, a non-bit value, or more
/// than 64 significant bits.
std::uint64_t gray_integrate(std::span<const Cell> bits);

/// gray_derivate(n) followed by a trailing 1; {1} for n == 0.
InitialCondition initial_condition(std::uint64_t n);

/// Inverse of initial_condition. Throws std::domain_error for an IC that is
/// not in the image of the numbering (empty, non-binary, or no trailing 1).
std::uint64_t initial_condition_number(const InitialCondition& ic);

/// Restricted Damerau-Levenshtein (optimal string alignment) distance:
/// insertions, deletions, substitutions and adjacent transpositions, no
/// substring edited twice.
template <typename T>
std::size_t damerau_levenshtein(std::span<const T> a, std::span<const T> b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;

  // Three rolling rows: i-2, i-1, i.
  std::vector<std::size_t> prev2(m + 1), prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;

  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      std::size_t best = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        best = std::min(best, prev2[j - 2] + 1);
      }
      cur[j] = best;
    }
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
  return prev[m];
}

template <typename T>
std::size_t damerau_levenshtein(const std::vector<T>& a, const std::vector<T>& b) {
  return damerau_levenshtein(std::span<const T>(a), std::span<const T>(b));
}

/// Left-pads the shorter sequence with zeros so both have equal length.
/// Models the infinite zero background when comparing codewords of
/// different lengths.
std::pair<std::vector<Cell>, std::vector<Cell>> pad_to_common_length(std::span<const Cell> a,
                                                                     std::span<const Cell> b);

}  // namespace ccl
