#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <utility>

#include "coxlift/bruhat.hpp"
#include "coxlift/glp.hpp"
#include "coxlift/qpoly.hpp"

namespace coxlift {

enum class DescentChoice { Smallest, Largest };

/// Memoized R-polynomials of one group. Not thread-safe: use one instance
/// per worker; values do not depend on which instance computed them.
template <CoxeterGroup G>
class RPolynomials {
 public:
  using Element = element_t<G>;

  explicit RPolynomials(const G& g, DescentChoice choice = DescentChoice::Smallest,
                        std::optional<int> max_length = std::nullopt, std::size_t max_entries = 20'000'000)
      : g_(&g), choice_(choice), max_length_(max_length), max_entries_(max_entries) {
    if (!g.label().is_finite() && !max_length)
      throw InvalidArgument("R-polynomials of an infinite group need a length cap");
  }

  /// R_{u,v}: 0 unless u <= v, 1 on the diagonal, and otherwise for s in D_R(v)
  /// R_{u,v} = R_{us,vs} if s in D_R(u), else q R_{us,vs} + (q-1) R_{u,vs}.
  const QPolynomial& operator()(const Element& u, const Element& v) {
    auto key = std::make_pair(u, v);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    if (max_length_ && g_->length(v) > *max_length_)
      throw CapExceeded("R-polynomial requested above the length cap");
    if (cache_.size() >= max_entries_) throw CapExceeded("R-polynomial cache is full");
    QPolynomial value;
    if (u == v) {
      value = QPolynomial::constant(1);
    } else if (leq(*g_, u, v)) {
      auto ds = right_descents(*g_, v);
      int s = choice_ == DescentChoice::Smallest ? ds.front() : ds.back();
      auto us = g_->right_multiply_simple(u, s);
      auto vs = g_->right_multiply_simple(v, s);
      if (g_->is_right_descent(u, s)) {
        value = (*this)(us, vs);
      } else {
        QPolynomial a = (*this)(us, vs);
        QPolynomial b = (*this)(u, vs);
        value = QPolynomial::q() * a + (QPolynomial::q() - QPolynomial::constant(1)) * b;
      }
    }
    return cache_.emplace(std::move(key), std::move(value)).first->second;
  }

  [[nodiscard]] std::size_t cache_size() const { return cache_.size(); }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Element, Element>& p) const noexcept {
      std::hash<Element> h;
      return h(p.first) * 1000003u ^ h(p.second);
    }
  };

  const G* g_;
  DescentChoice choice_;
  std::optional<int> max_length_;
  std::size_t max_entries_;
  std::unordered_map<std::pair<Element, Element>, QPolynomial, PairHash> cache_;
};

/// R_{u,v} = q R_{ut,vt} + (q-1) R_{u,vt}, both sides from the descent recursion.
template <CoxeterGroup G>
bool generalized_identity_holds(const G& g, RPolynomials<G>& r, const element_t<G>& u, const element_t<G>& v,
                                const Reflection& t) {
  auto ut = g.right_multiply(u, t);
  auto vt = g.right_multiply(v, t);
  QPolynomial lhs = r(u, v);
  QPolynomial rhs = QPolynomial::q() * r(ut, vt) + (QPolynomial::q() - QPolynomial::constant(1)) * r(u, vt);
  return lhs == rhs;
}

/// The generalized recursion for t minimal in AD(u,v), u < v, in a finite
/// simply-laced group.
template <CoxeterGroup G>
bool generalized_step_check(const G& g, RPolynomials<G>& r, const element_t<G>& u, const element_t<G>& v,
                            const Reflection& t, const RootPoset<G>* table = nullptr) {
  if (!g.label().is_finite() || !g.label().is_simply_laced())
    throw Unsupported("the generalized recursion is stated for finite simply-laced groups");
  if (!less(g, u, v)) throw PreconditionError("generalized_step_check needs u < v");
  auto minimal = minimal_ad(g, u, v, table);
  if (std::find(minimal.begin(), minimal.end(), t) == minimal.end())
    throw PreconditionError(to_string(t) + " is not minimal in AD(u,v)");
  return generalized_identity_holds(g, r, u, v, t);
}

}  // namespace coxlift
