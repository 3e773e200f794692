#pragma once

#include <charconv>
#include <compare>
#include <string>
#include <string_view>

#include "coxlift/error.hpp"

namespace coxlift {

enum class Family { A, B, D, E, AffineA };

/// Names a concrete Coxeter group.
///
/// AffineA follows the convention of n generators s_1..s_n acting on windows
/// of length n (the affine symmetric group on Z with period n), so "affA3" has
/// three generators.
struct GroupLabel {
  Family family = Family::A;
  int rank = 1;

  auto operator<=>(const GroupLabel&) const = default;

  [[nodiscard]] bool is_finite() const { return family != Family::AffineA; }
  [[nodiscard]] bool is_simply_laced() const { return family != Family::B || rank == 1; }
};

inline void validate(const GroupLabel& label) {
  switch (label.family) {
    case Family::A:
    case Family::B:
      if (label.rank < 1) throw InvalidArgument("rank must be positive");
      break;
    case Family::D:
      if (label.rank < 2) throw InvalidArgument("type D needs rank >= 2");
      break;
    case Family::E:
      if (label.rank < 6 || label.rank > 8) throw InvalidArgument("type E rank must be 6, 7 or 8");
      break;
    case Family::AffineA:
      if (label.rank < 3) throw InvalidArgument("affine type A needs n >= 3");
      break;
  }
}

inline std::string to_string(const GroupLabel& label) {
  switch (label.family) {
    case Family::A: return "A" + std::to_string(label.rank);
    case Family::B: return "B" + std::to_string(label.rank);
    case Family::D: return "D" + std::to_string(label.rank);
    case Family::E: return "E" + std::to_string(label.rank);
    case Family::AffineA: return "affA" + std::to_string(label.rank);
  }
  return "?";
}

inline GroupLabel parse_label(std::string_view text) {
  GroupLabel label;
  std::string_view digits;
  if (text.starts_with("affA")) {
    label.family = Family::AffineA;
    digits = text.substr(4);
  } else if (!text.empty()) {
    switch (text.front()) {
      case 'A': label.family = Family::A; break;
      case 'B': label.family = Family::B; break;
      case 'D': label.family = Family::D; break;
      case 'E': label.family = Family::E; break;
      default: throw ParseError("unknown group family in '" + std::string(text) + "'");
    }
    digits = text.substr(1);
  }
  int rank = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError("bad group label '" + std::string(text) + "'");
  label.rank = rank;
  validate(label);
  return label;
}

}  // namespace coxlift
