#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "coxlift/coxeter.hpp"
#include "coxlift/groups/affine_symmetric.hpp"
#include "coxlift/groups/exceptional.hpp"
#include "coxlift/groups/signed.hpp"
#include "coxlift/groups/symmetric.hpp"

// Element text syntax: "A3:[2,1,4,3]", "D4:[-2,-1,3,4]", "B3:[-1,3,2]",
// "affA3:[3,5,-2]" and, for every group, a word "w(s1 s2 s1)" in the
// generator names of the group. E elements are always printed as words.

namespace coxlift {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class Int>
std::string join_window(const std::vector<Int>& window) {
  std::string out = "[";
  for (std::size_t k = 0; k < window.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(window[k]);
  }
  return out + "]";
}

}  // namespace detail

/// Generator names accepted in words. B/D generators s_i = s(i,i+1) may also
/// be written "s12", "s23", ...
template <CoxeterGroup G>
std::unordered_map<std::string, int> generator_names(const G& g) {
  std::unordered_map<std::string, int> names;
  for (int i = 0; i < g.rank(); ++i) names.emplace(g.generator_name(i), i);
  if constexpr (std::is_same_v<G, SignedPermutationGroup>)
    for (int i = 0; i + 1 < g.rank(); ++i) names.emplace("s" + std::to_string(i + 1) + std::to_string(i + 2), i);
  return names;
}

template <CoxeterGroup G>
std::string format_word(const G& g, const Word& word) {
  std::string out = "w(";
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += " ";
    out += g.generator_name(word[k]);
  }
  return out + ")";
}

/// Parses the inside of "w(...)": names separated by spaces or commas.
template <CoxeterGroup G>
Word parse_word(const G& g, std::string_view body) {
  auto names = generator_names(g);
  Word word;
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() && (body[pos] == ' ' || body[pos] == ',')) ++pos;
    std::size_t end = pos;
    while (end < body.size() && body[end] != ' ' && body[end] != ',') ++end;
    if (end == pos) break;
    std::string token(body.substr(pos, end - pos));
    auto it = names.find(token);
    if (it == names.end()) throw ParseError("unknown generator '" + token + "' for " + to_string(g.label()));
    word.push_back(it->second);
    pos = end;
  }
  return word;
}

template <CoxeterGroup G>
std::string format_element(const G& g, const element_t<G>& w) {
  std::string prefix = to_string(g.label()) + ":";
  if constexpr (std::is_same_v<G, ExceptionalGroup>)
    return prefix + format_word(g, reduced_word(g, w));
  else
    return prefix + detail::join_window(w.window);
}

/// Accepts an optional "<label>:" prefix (which must match g), then "e", a
/// window "[...]", a word "w(...)", or for rank-2 groups a string of the
/// letters s and t (s the first generator).
template <CoxeterGroup G>
element_t<G> parse_element(const G& g, std::string_view text) {
  const std::string whole(text);
  text = detail::trim(text);
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    auto label = parse_label(detail::trim(text.substr(0, colon)));
    if (label != g.label())
      throw InvalidArgument("element '" + whole + "' does not belong to " + to_string(g.label()));
    text = detail::trim(text.substr(colon + 1));
  }
  if (text.empty()) throw ParseError("empty element text");
  if (text == "e") return g.identity();
  if (text.starts_with("w(") && text.ends_with(")")) return from_word(g, parse_word(g, text.substr(2, text.size() - 3)));
  if (text.front() == '[' && text.back() == ']') {
    if constexpr (std::is_same_v<G, ExceptionalGroup>) {
      throw ParseError("E elements are written as words w(...), got '" + whole + "'");
    } else {
      auto values = detail::parse_int_list(text.substr(1, text.size() - 2), ',', whole);
      if constexpr (std::is_same_v<G, AffineSymmetricGroup>) {
        return g.from_window(values);
      } else {
        return g.from_window(std::vector<int>(values.begin(), values.end()));
      }
    }
  }
  if (g.rank() == 2 && text.find_first_not_of("st") == std::string_view::npos) {
    Word word;
    for (char c : text) word.push_back(c == 's' ? 0 : 1);
    return from_word(g, word);
  }
  throw ParseError("cannot parse element '" + whole + "'");
}

}  // namespace coxlift
