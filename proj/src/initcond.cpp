#include "ccl/initcond.hpp"

#include <bit>
#include <stdexcept>

namespace ccl {

InitialCondition::InitialCondition(std::vector<Cell> c) : cells(std::move(c)) {
  if (cells.empty()) throw std::domain_error("initial condition must be non-empty");
}

std::vector<Cell> gray_derivate(std::uint64_t n) {
  if (n == 0) return {0};
  const int digits = std::bit_width(n);
  std::vector<Cell> out(static_cast<std::size_t>(digits));
  Cell previous = 0;
  for (int i = 0; i < digits; ++i) {
    const Cell digit = static_cast<Cell>((n >> (digits - 1 - i)) & 1U);
    out[static_cast<std::size_t>(i)] = i == 0 ? digit : static_cast<Cell>((previous + digit) % 2);
    previous = digit;
  }
  return out;
}

std::uint64_t gray_integrate(std::span<const Cell> bits) {
  if (bits.empty()) throw std::domain_error("gray_integrate: empty bit sequence");
  std::uint64_t value = 0;
  unsigned parity = 0;
  bool leading = true;
  int significant = 0;
  for (Cell b : bits) {
    if (b > 1) throw std::domain_error("gray_integrate: value is not a bit");
    parity = (parity + b) % 2;
    if (leading && parity == 0) continue;
    leading = false;
    if (++significant > 64) throw std::domain_error("gray_integrate: more than 64 significant bits");
    value = (value << 1) | parity;
  }
  return value;
}

InitialCondition initial_condition(std::uint64_t n) {
  if (n == 0) return InitialCondition{{1}};
  auto cells = gray_derivate(n);
  cells.push_back(1);
  return InitialCondition{std::move(cells)};
}

std::uint64_t initial_condition_number(const InitialCondition& ic) {
  const auto& cells = ic.cells;
  if (cells.empty()) throw std::domain_error("initial_condition_number: empty initial condition");
  for (Cell c : cells) {
    if (c > 1) throw std::domain_error("initial_condition_number: non-binary cell");
  }
  if (cells.back() != 1) throw std::domain_error("initial_condition_number: last cell must be 1");
  if (cells.size() == 1) return 0;
  // Codewords of n > 0 always start with a 1.
  if (cells.front() != 1) throw std::domain_error("initial_condition_number: leading cell must be 1");
  return gray_integrate(std::span<const Cell>(cells).first(cells.size() - 1));
}

std::pair<std::vector<Cell>, std::vector<Cell>> pad_to_common_length(std::span<const Cell> a,
                                                                     std::span<const Cell> b) {
  const std::size_t len = std::max(a.size(), b.size());
  std::vector<Cell> pa(len - a.size(), 0), pb(len - b.size(), 0);
  pa.insert(pa.end(), a.begin(), a.end());
  pb.insert(pb.end(), b.begin(), b.end());
  return {std::move(pa), std::move(pb)};
}

}  // namespace ccl
