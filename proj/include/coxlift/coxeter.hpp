#pragma once

#include <algorithm>
#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coxlift/error.hpp"
#include "coxlift/label.hpp"
#include "coxlift/reflection.hpp"
#include "coxlift/root_vector.hpp"

namespace coxlift {

/// A word in the simple generators, as generator indices 0..rank-1.
using Word = std::vector<int>;

/// Requirements on a concrete Coxeter group realization. Every algorithm in
/// the library is written against this concept; elements are plain values
/// with structural equality on their canonical form.
template <class G>
concept CoxeterGroup = requires(const G& g, const typename G::element_type& w, const Reflection& t, int i) {
  typename G::element_type;
  requires std::regular<typename G::element_type>;
  requires std::totally_ordered<typename G::element_type>;
  { std::hash<typename G::element_type>{}(w) } -> std::convertible_to<std::size_t>;
  { g.label() } -> std::same_as<GroupLabel>;
  { g.rank() } -> std::convertible_to<int>;
  { g.identity() } -> std::same_as<typename G::element_type>;
  { g.right_multiply_simple(w, i) } -> std::same_as<typename G::element_type>;
  { g.is_right_descent(w, i) } -> std::convertible_to<bool>;
  { g.right_multiply(w, t) } -> std::same_as<typename G::element_type>;
  { g.is_inversion(w, t) } -> std::convertible_to<bool>;
  { g.inversions(w) } -> std::same_as<std::vector<Reflection>>;
  { g.length(w) } -> std::convertible_to<int>;
  { g.multiply(w, w) } -> std::same_as<typename G::element_type>;
  { g.inverse(w) } -> std::same_as<typename G::element_type>;
  { g.simple_reflection(i) } -> std::same_as<Reflection>;
  { g.valid_reflection(t) } -> std::convertible_to<bool>;
  { g.reflection_element(t) } -> std::same_as<typename G::element_type>;
  { g.reflection_of(w) } -> std::same_as<std::optional<Reflection>>;
  { g.positive_root(t) } -> std::same_as<RootVector>;
  { g.root(t) } -> std::same_as<RootVector>;
  { g.generator_name(i) } -> std::same_as<std::string>;
};

/// Finite groups additionally list their reflections.
template <class G>
concept FiniteCoxeterGroup = CoxeterGroup<G> && requires(const G& g) {
  { g.reflections() } -> std::same_as<const std::vector<Reflection>&>;
};

template <CoxeterGroup G>
using element_t = typename G::element_type;

template <CoxeterGroup G>
element_t<G> generator(const G& g, int i) {
  return g.right_multiply_simple(g.identity(), i);
}

template <CoxeterGroup G>
std::optional<int> first_right_descent(const G& g, const element_t<G>& w) {
  for (int i = 0; i < g.rank(); ++i)
    if (g.is_right_descent(w, i)) return i;
  return std::nullopt;
}

template <CoxeterGroup G>
std::vector<int> right_descents(const G& g, const element_t<G>& w) {
  std::vector<int> out;
  for (int i = 0; i < g.rank(); ++i)
    if (g.is_right_descent(w, i)) out.push_back(i);
  return out;
}

template <CoxeterGroup G>
std::vector<int> left_descents(const G& g, const element_t<G>& w) {
  return right_descents(g, g.inverse(w));
}

/// Reduced word obtained by repeatedly stripping the smallest right descent;
/// w equals the product of the returned generators from left to right.
template <CoxeterGroup G>
Word reduced_word(const G& g, element_t<G> w) {
  Word out;
  while (auto s = first_right_descent(g, w)) {
    out.push_back(*s);
    w = g.right_multiply_simple(w, *s);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

template <CoxeterGroup G>
element_t<G> apply_word(const G& g, element_t<G> w, const Word& word) {
  for (int s : word) {
    if (s < 0 || s >= g.rank()) throw InvalidArgument("generator index out of range");
    w = g.right_multiply_simple(w, s);
  }
  return w;
}

template <CoxeterGroup G>
element_t<G> from_word(const G& g, const Word& word) {
  return apply_word(g, g.identity(), word);
}

/// Order of s_i s_j, found by repeated multiplication.
template <CoxeterGroup G>
int product_order(const G& g, int i, int j, int limit = 64) {
  const auto e = g.identity();
  auto x = g.right_multiply_simple(generator(g, i), j);
  auto p = x;
  for (int k = 1; k <= limit; ++k) {
    if (p == e) return k;
    p = g.multiply(p, x);
  }
  throw Error("product of generators has order above limit");
}

template <CoxeterGroup G>
std::vector<std::vector<int>> coxeter_matrix(const G& g) {
  const int r = g.rank();
  std::vector<std::vector<int>> m(r, std::vector<int>(r, 1));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) m[i][j] = m[j][i] = product_order(g, i, j);
  return m;
}

/// Cartan matrix of a simply-laced Coxeter matrix: A[i][j] = <alpha_i, alpha_j^vee>.
inline std::vector<std::vector<int>> simply_laced_cartan(const std::vector<std::vector<int>>& coxeter) {
  const std::size_t r = coxeter.size();
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j)
        a[i][j] = 2;
      else if (coxeter[i][j] == 3)
        a[i][j] = -1;
      else if (coxeter[i][j] != 2)
        throw InvalidArgument("coxeter matrix is not simply laced");
    }
  return a;
}

/// s_j acting on a root written over the simple roots.
inline void apply_simple_to_root(const std::vector<std::vector<int>>& cartan, int j, RootVector& alpha) {
  Rational pairing(0);
  for (std::size_t i = 0; i < alpha.size(); ++i) pairing += alpha[i] * Rational(cartan[i][j]);
  alpha[j] -= pairing;
}

/// Positive root of a reflection computed from the group action alone: peel
/// t = s t' s with s a right descent of t until t' is simple, then transport
/// the simple root back with the Cartan action.
template <CoxeterGroup G>
RootVector root_by_conjugation(const G& g, const std::vector<std::vector<int>>& cartan, const Reflection& t) {
  auto cur = g.reflection_element(t);
  Word path;
  while (g.length(cur) > 1) {
    auto s = first_right_descent(g, cur);
    path.push_back(*s);
    cur = g.right_multiply_simple(g.multiply(generator(g, *s), cur), *s);
  }
  auto s = first_right_descent(g, cur);
  if (!s) throw InvalidArgument("identity is not a reflection");
  RootVector alpha = zero_root(static_cast<std::size_t>(g.rank()));
  alpha[*s] = 1;
  for (auto it = path.rbegin(); it != path.rend(); ++it) apply_simple_to_root(cartan, *it, alpha);
  return alpha;
}

/// Left multiplication by reading off a reduced word of the right factor.
template <CoxeterGroup G>
element_t<G> multiply_via_word(const G& g, const element_t<G>& u, const element_t<G>& v) {
  return apply_word(g, u, reduced_word(g, v));
}

template <CoxeterGroup G>
element_t<G> inverse_via_word(const G& g, const element_t<G>& w) {
  Word word = reduced_word(g, w);
  std::reverse(word.begin(), word.end());
  return from_word(g, word);
}

/// u^{-1} r u style conjugation of a reflection label by an element: returns
/// the label of x t x^{-1}.
template <CoxeterGroup G>
Reflection conjugate_label(const G& g, const element_t<G>& x, const Reflection& t) {
  auto y = g.multiply(g.multiply(x, g.reflection_element(t)), g.inverse(x));
  auto r = g.reflection_of(y);
  if (!r) throw Error("conjugate of a reflection is not a reflection");
  return *r;
}

}  // namespace coxlift
