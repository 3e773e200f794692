#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "coxlift/error.hpp"

namespace coxlift {

enum class ReflectionKind : std::uint8_t {
  S,        // s(i,j): transposition of positions i<j
  T,        // t(i,j): positions i<j swapped with both signs flipped
  BSign,    // b(i): sign change at position i (type B only)
  ESubset,  // H{...}: E8 reflection indexed by a subset of [8] of size 1,2,3,6
  Affine,   // aff(i,j;m): affine transposition of positions i and j+m*n
};

/// Symbolic reflection label. Plain value; which labels are valid depends on
/// the group (see each group's `valid_reflection`).
struct Reflection {
  ReflectionKind kind = ReflectionKind::S;
  int i = 0;
  int j = 0;
  std::int64_t m = 0;
  std::uint16_t subset = 0;  // bit h-1 set iff h in H

  auto operator<=>(const Reflection&) const = default;

  static Reflection s(int a, int b) { return {ReflectionKind::S, std::min(a, b), std::max(a, b), 0, 0}; }
  static Reflection t(int a, int b) { return {ReflectionKind::T, std::min(a, b), std::max(a, b), 0, 0}; }
  static Reflection sign(int a) { return {ReflectionKind::BSign, a, 0, 0, 0}; }
  static Reflection e_subset(std::uint16_t mask) { return {ReflectionKind::ESubset, 0, 0, 0, mask}; }
  static Reflection e_subset(std::initializer_list<int> elems) {
    std::uint16_t mask = 0;
    for (int h : elems) mask |= static_cast<std::uint16_t>(1u << (h - 1));
    return e_subset(mask);
  }
  static Reflection affine(int a, int b, std::int64_t shift) { return {ReflectionKind::Affine, a, b, shift, 0}; }

  [[nodiscard]] int subset_size() const { return std::popcount(subset); }
  [[nodiscard]] std::vector<int> subset_elements() const {
    std::vector<int> out;
    for (int h = 1; h <= 8; ++h)
      if (subset & (1u << (h - 1))) out.push_back(h);
    return out;
  }
};

inline std::string to_string(const Reflection& r) {
  switch (r.kind) {
    case ReflectionKind::S: return "s(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
    case ReflectionKind::T: return "t(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
    case ReflectionKind::BSign: return "b(" + std::to_string(r.i) + ")";
    case ReflectionKind::ESubset: {
      std::string out = "H{";
      bool first = true;
      for (int h : r.subset_elements()) {
        if (!first) out += ",";
        out += std::to_string(h);
        first = false;
      }
      return out + "}";
    }
    case ReflectionKind::Affine:
      return "aff(" + std::to_string(r.i) + "," + std::to_string(r.j) + ";" + (r.m >= 0 ? "+" : "-") +
             std::to_string(r.m >= 0 ? r.m : -r.m) + ")";
  }
  return "?";
}

namespace detail {

inline std::vector<std::int64_t> parse_int_list(std::string_view body, char sep, std::string_view whole) {
  std::vector<std::int64_t> out;
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = body.find(sep, pos);
    std::string_view item = body.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw ParseError("bad integer '" + std::string(item) + "' in '" + std::string(whole) + "'");
    out.push_back(value);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace detail

/// Parses "s(1,3)", "t(1,3)", "b(2)", "H{1,4,5}" and "aff(1,3;+2)".
inline Reflection parse_reflection(std::string_view text) {
  auto inside = [&](std::string_view open, char close) -> std::string_view {
    if (!text.starts_with(open) || text.back() != close) throw ParseError("bad reflection '" + std::string(text) + "'");
    return text.substr(open.size(), text.size() - open.size() - 1);
  };
  auto need_pair = [&](const std::vector<std::int64_t>& v) {
    if (v.size() != 2 || v[0] == v[1] || v[0] < 1 || v[1] < 1)
      throw ParseError("reflection needs two distinct positive indices: '" + std::string(text) + "'");
  };
  if (text.empty()) throw ParseError("empty reflection");
  if (text.starts_with("s(")) {
    auto v = detail::parse_int_list(inside("s(", ')'), ',', text);
    need_pair(v);
    return Reflection::s(static_cast<int>(v[0]), static_cast<int>(v[1]));
  }
  if (text.starts_with("t(")) {
    auto v = detail::parse_int_list(inside("t(", ')'), ',', text);
    need_pair(v);
    return Reflection::t(static_cast<int>(v[0]), static_cast<int>(v[1]));
  }
  if (text.starts_with("b(")) {
    auto v = detail::parse_int_list(inside("b(", ')'), ',', text);
    if (v.size() != 1 || v[0] < 1) throw ParseError("bad sign reflection '" + std::string(text) + "'");
    return Reflection::sign(static_cast<int>(v[0]));
  }
  if (text.starts_with("H{")) {
    auto v = detail::parse_int_list(inside("H{", '}'), ',', text);
    std::uint16_t mask = 0;
    for (auto h : v) {
      if (h < 1 || h > 8) throw ParseError("E8 subset entries must lie in 1..8: '" + std::string(text) + "'");
      if (mask & (1u << (h - 1))) throw ParseError("repeated subset entry in '" + std::string(text) + "'");
      mask |= static_cast<std::uint16_t>(1u << (h - 1));
    }
    return Reflection::e_subset(mask);
  }
  if (text.starts_with("aff(")) {
    std::string_view body = inside("aff(", ')');
    std::size_t semi = body.find(';');
    if (semi == std::string_view::npos) throw ParseError("affine reflection needs ';': '" + std::string(text) + "'");
    auto ij = detail::parse_int_list(body.substr(0, semi), ',', text);
    auto m = detail::parse_int_list(body.substr(semi + 1), ',', text);
    if (ij.size() != 2 || m.size() != 1 || ij[0] >= ij[1] || ij[0] < 1)
      throw ParseError("bad affine reflection '" + std::string(text) + "'");
    return Reflection::affine(static_cast<int>(ij[0]), static_cast<int>(ij[1]), m[0]);
  }
  throw ParseError("unknown reflection syntax '" + std::string(text) + "'");
}

}  // namespace coxlift

template <>
struct std::hash<coxlift::Reflection> {
  std::size_t operator()(const coxlift::Reflection& r) const noexcept {
    std::size_t h = static_cast<std::size_t>(r.kind);
    h = h * 1000003u ^ static_cast<std::size_t>(r.i);
    h = h * 1000003u ^ static_cast<std::size_t>(r.j);
    h = h * 1000003u ^ static_cast<std::size_t>(r.m);
    h = h * 1000003u ^ static_cast<std::size_t>(r.subset);
    return h;
  }
};
