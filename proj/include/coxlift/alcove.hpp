#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "coxlift/bruhat.hpp"
#include "coxlift/enumerate.hpp"
#include "coxlift/glp.hpp"
#include "coxlift/groups/affine_symmetric.hpp"

// Alcove geometry of the affine symmetric group. The element w is identified
// with the alcove A_w = w^{-1}(A_0). For the direction (i,j) the linear
// reflection is aff(i,j;0) and its translate through the hyperplane
// phi = k is t^(k) = aff(i,j;-k); the generator s_n is t^(1) for (1,n).

namespace coxlift::alcove {

using Group = AffineSymmetricGroup;
using Element = AffinePermutation;
using Direction = std::pair<int, int>;

inline std::vector<Direction> directions(const Group& g) {
  std::vector<Direction> out;
  for (int i = 1; i <= g.period(); ++i)
    for (int j = i + 1; j <= g.period(); ++j) out.emplace_back(i, j);
  return out;
}

/// t^(k) in direction (i,j).
inline Reflection translate(const Direction& d, std::int64_t k) { return Reflection::affine(d.first, d.second, -k); }

/// The k with phi in (k, k+1) on A_w, counted from the hyperplanes of this
/// direction that separate A_0 from A_w (the members of D(w)).
inline std::int64_t stripe_level(const Group& g, const Element& w, const Direction& d) {
  std::int64_t below = 0, above = 0;
  for (const auto& t : g.inversions(w)) {
    if (t.i != d.first || t.j != d.second) continue;
    if (-t.m <= 0)
      ++below;
    else
      ++above;
  }
  if (g.is_inversion(w, translate(d, 0))) return -below;
  return above;
}

/// floor((w(j) - w(i)) / n), which must agree with stripe_level.
inline std::int64_t stripe_level_closed(const Group& g, const Element& w, const Direction& d) {
  return detail::floor_div(w.window[d.second - 1] - w.window[d.first - 1], g.period());
}

/// Number of hyperplanes separating A_u and A_v.
inline std::int64_t gallery_distance(const Group& g, const Element& u, const Element& v) {
  std::int64_t total = 0;
  for (const auto& d : directions(g)) total += std::llabs(stripe_level(g, u, d) - stripe_level(g, v, d));
  return total;
}

/// Whether A_w lies in Str(t^(k)) = {k-1 < phi < k+1}.
inline bool in_stripe(const Group& g, const Element& w, const Direction& d, std::int64_t k) {
  auto level = stripe_level(g, w, d);
  return level == k - 1 || level == k;
}

/// |d(A_u, A_v) - d(A_u, t^(k)(A_v))| >= 3 for alcoves outside the stripe;
/// t^(k)(A_v) is the alcove of v t^(k).
inline bool stripe_gap_check(const Group& g, const Element& u, const Element& v, const Direction& d,
                             std::int64_t k) {
  if (in_stripe(g, u, d, k) || in_stripe(g, v, d, k))
    throw PreconditionError("stripe_gap_check needs both alcoves outside the stripe");
  auto moved = g.right_multiply(v, translate(d, k));
  return std::llabs(gallery_distance(g, u, v) - gallery_distance(g, u, moved)) >= 3;
}

struct Counterexample {
  Element u;
  Element v;
  std::vector<Reflection> ts;
};

/// u = s_1...s_{n-1}, v = s_1...s_n s_1...s_{n-1} and
/// t_i = u^{-1} s_n ... s_{i+1} s_i s_{i+1} ... s_n u.
inline Counterexample counterexample(const Group& g) {
  const int n = g.period();
  Word uw, vw;
  for (int k = 0; k < n - 1; ++k) uw.push_back(k);
  for (int k = 0; k < n; ++k) vw.push_back(k);
  vw.insert(vw.end(), uw.begin(), uw.end());
  Counterexample out{from_word(g, uw), from_word(g, vw), {}};
  const auto uinv = g.inverse(out.u);
  for (int i = 1; i <= n; ++i) {
    Word w;
    for (int k = n; k > i; --k) w.push_back(k - 1);
    w.push_back(i - 1);
    for (int k = i + 1; k <= n; ++k) w.push_back(k - 1);
    auto x = g.multiply(g.multiply(uinv, from_word(g, w)), out.u);
    auto t = g.reflection_of(x);
    if (!t) throw Error("t_i is not a reflection");
    out.ts.push_back(*t);
  }
  return out;
}

/// A_u lies in -C_0 iff every linear reflection aff(i,j;0) is in D(u).
inline bool in_negative_chamber(const Group& g, const Element& u) {
  for (const auto& d : directions(g))
    if (!g.is_inversion(u, translate(d, 0))) return false;
  return true;
}

/// The shortest element whose alcove lies in -C_0: the longest element of
/// the finite parabolic generated by s_1..s_{n-1}.
inline Element negative_chamber_base(const Group& g) {
  Element w = g.identity();
  std::reverse(w.window.begin(), w.window.end());
  return w;
}

/// Search for u in -C_0 and v > u, l(v) <= max_length, such that no t in
/// AD(u,v) has the covering property.
inline std::optional<std::pair<Element, Element>> infinite_failure_search(const Group& g, int max_length) {
  const Element u = negative_chamber_base(g);
  const int lu = g.length(u);
  if (max_length <= lu) return std::nullopt;
  for (const auto& v : enumerate(g, max_length)) {
    if (g.length(v) <= lu || !leq(g, u, v)) continue;
    bool any_covering = false;
    for (const auto& t : ad_set(g, u, v))
      if (covering_property(g, u, v, t)) {
        any_covering = true;
        break;
      }
    if (!any_covering) return std::make_pair(u, v);
  }
  return std::nullopt;
}

/// Maximal length of an element in a proper parabolic subgroup.
inline int max_parabolic_length(const Group& g) {
  int best = 0;
  for (int drop = 0; drop < g.rank(); ++drop) {
    std::vector<int> gens;
    for (int s = 0; s < g.rank(); ++s)
      if (s != drop) gens.push_back(s);
    best = std::max(best, parabolic_longest_length(g, gens));
  }
  return best;
}

/// u < v for every v with band_start < l(v) <= band_start + band_width.
inline bool dominance_probe(const Group& g, const Element& u, int band_start, int band_width) {
  if (u == g.identity()) return true;
  const int bound = g.length(u) * (max_parabolic_length(g) + 1);
  if (band_start < bound)
    throw PreconditionError("band must start at or above l(u)(k+1) = " + std::to_string(bound));
  for (const auto& v : enumerate(g, band_start + band_width)) {
    const int lv = g.length(v);
    if (lv > band_start && !less(g, u, v)) return false;
  }
  return true;
}

/// Length bound for escape_search: with K the largest |k| among the stripes,
/// an alcove whose levels in the simple directions (i,i+1) all equal -(K+2)
/// lies in -C_0, avoids every stripe, and has level at least -(j-i)(K+2) in
/// direction (i,j).
inline int escape_length_bound(const Group& g, const std::vector<std::pair<Direction, std::int64_t>>& stripes) {
  std::int64_t K = 0;
  for (const auto& s : stripes) K = std::max<std::int64_t>(K, std::llabs(s.second));
  std::int64_t span = 0;
  for (const auto& d : directions(g)) span += d.second - d.first;
  return static_cast<int>((K + 2) * span);
}

/// An alcove in -C_0 outside all the given stripes, of length at most max_length.
inline std::optional<Element> escape_search(const Group& g, const std::vector<std::pair<Direction, std::int64_t>>& stripes,
                                            int max_length) {
  for (const auto& w : enumerate(g, max_length)) {
    if (!in_negative_chamber(g, w)) continue;
    bool inside = false;
    for (const auto& [d, k] : stripes)
      if (in_stripe(g, w, d, k)) {
        inside = true;
        break;
      }
    if (!inside) return w;
  }
  return std::nullopt;
}

}  // namespace coxlift::alcove
