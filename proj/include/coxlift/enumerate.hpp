#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include "coxlift/coxeter.hpp"

namespace coxlift {

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// Breadth-first enumeration by length. Layer k+1 is obtained from layer k by
/// right multiplication with non-descents, deduplicated and sorted by
/// canonical form, so the output order is reproducible.
///
/// Without max_length the group must be finite; hitting `cap` elements throws
/// CapExceeded either way.
template <CoxeterGroup G>
std::vector<element_t<G>> enumerate(const G& g, std::optional<int> max_length = std::nullopt,
                                    std::size_t cap = kDefaultEnumerationCap) {
  if (!max_length && !g.label().is_finite())
    throw InvalidArgument("whole-group enumeration needs a finite group; pass a max length for " +
                          to_string(g.label()));
  std::vector<element_t<G>> out{g.identity()};
  std::vector<element_t<G>> layer{g.identity()};
  for (int len = 1; !max_length || len <= *max_length; ++len) {
    std::unordered_set<element_t<G>> next;
    for (const auto& w : layer)
      for (int s = 0; s < g.rank(); ++s)
        if (!g.is_right_descent(w, s)) next.insert(g.right_multiply_simple(w, s));
    if (next.empty()) break;
    if (out.size() + next.size() > cap)
      throw CapExceeded("enumeration of " + to_string(g.label()) + " exceeds cap of " + std::to_string(cap));
    layer.assign(next.begin(), next.end());
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Elements grouped by length: result[k] holds the sorted length-k layer.
template <CoxeterGroup G>
std::vector<std::vector<element_t<G>>> enumerate_layers(const G& g, std::optional<int> max_length = std::nullopt,
                                                        std::size_t cap = kDefaultEnumerationCap) {
  std::vector<std::vector<element_t<G>>> layers;
  for (auto& w : enumerate(g, max_length, cap)) {
    auto len = static_cast<std::size_t>(g.length(w));
    if (layers.size() <= len) layers.resize(len + 1);
    layers[len].push_back(std::move(w));
  }
  return layers;
}

/// Longest element of a finite group (the unique element without ascents).
template <CoxeterGroup G>
element_t<G> longest_element(const G& g) {
  if (!g.label().is_finite()) throw InvalidArgument("infinite groups have no longest element");
  auto w = g.identity();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s = 0; s < g.rank(); ++s)
      if (!g.is_right_descent(w, s)) {
        w = g.right_multiply_simple(w, s);
        grew = true;
        break;
      }
  }
  return w;
}

/// Length of the longest element of the parabolic subgroup generated by
/// `gens` (which must be finite).
template <CoxeterGroup G>
int parabolic_longest_length(const G& g, const std::vector<int>& gens) {
  auto w = g.identity();
  bool grew = true;
  int len = 0;
  while (grew) {
    grew = false;
    for (int s : gens)
      if (!g.is_right_descent(w, s)) {
        w = g.right_multiply_simple(w, s);
        ++len;
        grew = true;
        break;
      }
    if (len > 100000) throw CapExceeded("parabolic subgroup looks infinite");
  }
  return len;
}

}  // namespace coxlift
