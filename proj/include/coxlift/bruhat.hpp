#pragma once

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>
#include <vector>

#include "coxlift/coxeter.hpp"
#include "coxlift/roots.hpp"

namespace coxlift {

namespace detail {

/// Descent recursion: u <= v iff min(u, us) <= vs for s in D_R(v).
/// `pick` chooses the descent of v to strip.
template <CoxeterGroup G, class Pick>
bool bruhat_leq_with(const G& g, element_t<G> u, element_t<G> v, Pick&& pick) {
  int lu = g.length(u), lv = g.length(v);
  while (true) {
    if (lu > lv) return false;
    if (lu == lv) return u == v;
    if (lu == 0) return true;
    int s = pick(v);
    if (g.is_right_descent(u, s)) {
      u = g.right_multiply_simple(u, s);
      --lu;
    }
    v = g.right_multiply_simple(v, s);
    --lv;
  }
}

}  // namespace detail

/// Bruhat order, stripping the smallest right descent of v at each step.
template <CoxeterGroup G>
bool leq(const G& g, const element_t<G>& u, const element_t<G>& v) {
  return detail::bruhat_leq_with(g, u, v, [&](const element_t<G>& w) { return *first_right_descent(g, w); });
}

/// Same recursion with a random descent choice; the answer must not depend
/// on the choice.
template <CoxeterGroup G, class Rng>
bool leq_random_descent(const G& g, const element_t<G>& u, const element_t<G>& v, Rng& rng) {
  return detail::bruhat_leq_with(g, u, v, [&](const element_t<G>& w) {
    auto ds = right_descents(g, w);
    std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
    return ds[pick(rng)];
  });
}

template <CoxeterGroup G>
bool less(const G& g, const element_t<G>& u, const element_t<G>& v) {
  return u != v && leq(g, u, v);
}

/// u is covered by v.
template <CoxeterGroup G>
bool covers(const G& g, const element_t<G>& u, const element_t<G>& v) {
  return g.length(v) == g.length(u) + 1 && leq(g, u, v);
}

/// All z with u <= z <= v, sorted by (length, canonical form). Elements
/// below v are reached from v by repeatedly multiplying with inversions.
template <CoxeterGroup G>
std::vector<element_t<G>> interval(const G& g, const element_t<G>& u, const element_t<G>& v) {
  if (!leq(g, u, v)) throw PreconditionError("interval needs u <= v");
  const int lu = g.length(u);
  std::unordered_set<element_t<G>> seen{v};
  std::deque<element_t<G>> queue{v};
  std::vector<element_t<G>> out;
  while (!queue.empty()) {
    auto z = std::move(queue.front());
    queue.pop_front();
    if (!leq(g, u, z)) continue;
    out.push_back(z);
    for (const auto& t : g.inversions(z)) {
      auto y = g.right_multiply(z, t);
      if (g.length(y) >= lu && seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    int la = g.length(a), lb = g.length(b);
    return la != lb ? la < lb : a < b;
  });
  return out;
}

/// Classical lifting: for u < v and s in D_R(v) \ D_R(u), u <= vs and us <= v.
template <CoxeterGroup G>
bool lifting_check(const G& g, const element_t<G>& u, const element_t<G>& v, int s) {
  if (!less(g, u, v)) throw PreconditionError("lifting_check needs u < v");
  if (!g.is_right_descent(v, s) || g.is_right_descent(u, s))
    throw PreconditionError("lifting_check needs s in D_R(v) \\ D_R(u)");
  return leq(g, u, g.right_multiply_simple(v, s)) && leq(g, g.right_multiply_simple(u, s), v);
}

}  // namespace coxlift
