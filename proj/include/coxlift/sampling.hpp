#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "coxlift/bruhat.hpp"
#include "coxlift/coxeter.hpp"
#include "coxlift/roots.hpp"

namespace coxlift {

using Rng = std::mt19937_64;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Number of reflections for finite groups (= l(w0)); for infinite groups the
/// caller's length cap.
template <CoxeterGroup G>
int sampling_diameter(const G& g, std::optional<int> max_length) {
  if constexpr (FiniteCoxeterGroup<G>) {
    int d = static_cast<int>(g.reflections().size());
    return max_length ? std::min(d, *max_length) : d;
  } else {
    if (!max_length) throw InvalidArgument("sampling " + to_string(g.label()) + " needs a max length");
    return *max_length;
  }
}

/// Random reduced word of the given length, grown one non-descent generator
/// at a time; stops early only at the longest element.
template <CoxeterGroup G>
element_t<G> random_element_of_length(const G& g, int length, Rng& rng) {
  auto w = g.identity();
  std::vector<int> ascents;
  for (int k = 0; k < length; ++k) {
    ascents.clear();
    for (int s = 0; s < g.rank(); ++s)
      if (!g.is_right_descent(w, s)) ascents.push_back(s);
    if (ascents.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, ascents.size() - 1);
    w = g.right_multiply_simple(w, ascents[pick(rng)]);
  }
  return w;
}

/// Length uniform in [1, diameter].
template <CoxeterGroup G>
element_t<G> random_element(const G& g, int diameter, Rng& rng) {
  std::uniform_int_distribution<int> len(1, diameter);
  return random_element_of_length(g, len(rng), rng);
}

/// Independent random u, v, redrawn until u < v.
template <CoxeterGroup G>
std::pair<element_t<G>, element_t<G>> random_less_pair(const G& g, int diameter, Rng& rng,
                                                       std::size_t max_attempts = 1'000'000) {
  for (std::size_t k = 0; k < max_attempts; ++k) {
    auto u = random_element(g, diameter, rng);
    auto v = random_element(g, diameter, rng);
    if (less(g, u, v)) return {std::move(u), std::move(v)};
  }
  throw CapExceeded("no comparable pair found while sampling");
}

/// Independent random u, v, redrawn until AD(u,v) is nonempty.
template <CoxeterGroup G>
std::pair<element_t<G>, element_t<G>> random_ad_pair(const G& g, int diameter, Rng& rng,
                                                     std::size_t max_attempts = 1'000'000) {
  for (std::size_t k = 0; k < max_attempts; ++k) {
    auto u = random_element(g, diameter, rng);
    auto v = random_element(g, diameter, rng);
    if (!ad_set(g, u, v).empty()) return {std::move(u), std::move(v)};
  }
  throw CapExceeded("no pair with nonempty AD found while sampling");
}

}  // namespace coxlift
