#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxlift/coxeter.hpp"

namespace coxlift {

/// Element of A_n: a permutation of [n+1] in window notation.
struct Permutation {
  std::vector<int> window;

  auto operator<=>(const Permutation&) const = default;
};

}  // namespace coxlift

template <>
struct std::hash<coxlift::Permutation> {
  std::size_t operator()(const coxlift::Permutation& p) const noexcept {
    std::size_t h = 0;
    for (int x : p.window) h = h * 131 + static_cast<std::size_t>(x);
    return h;
  }
};

namespace coxlift {

/// A_n realized as permutations of [n+1]; generator s_i swaps window
/// positions i and i+1 under right multiplication.
class SymmetricGroup {
 public:
  using element_type = Permutation;

  explicit SymmetricGroup(int rank) : rank_(rank) {
    validate(GroupLabel{Family::A, rank});
    const int n = degree();
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) reflections_.push_back(Reflection::s(i, j));
    for (std::size_t k = 0; k < reflections_.size(); ++k) index_.emplace(reflections_[k], static_cast<int>(k));
    cartan_ = simply_laced_cartan(coxeter_matrix(*this));
    for (const auto& t : reflections_) roots_.push_back(root_by_conjugation(*this, cartan_, t));
  }

  [[nodiscard]] GroupLabel label() const { return {Family::A, rank_}; }
  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] int degree() const { return rank_ + 1; }
  [[nodiscard]] bool is_finite() const { return true; }

  [[nodiscard]] Permutation identity() const {
    Permutation p;
    p.window.resize(static_cast<std::size_t>(degree()));
    for (int i = 0; i < degree(); ++i) p.window[i] = i + 1;
    return p;
  }

  [[nodiscard]] Permutation from_window(std::vector<int> window) const {
    const int n = degree();
    if (static_cast<int>(window.size()) != n) throw InvalidArgument("window length must be n+1 for A_n");
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    for (int x : window) {
      if (x < 1 || x > n || seen[x]) throw InvalidArgument("window is not a permutation of [n+1]");
      seen[x] = true;
    }
    return Permutation{std::move(window)};
  }

  [[nodiscard]] Permutation right_multiply_simple(const Permutation& w, int i) const {
    check_generator(i);
    Permutation out = w;
    std::swap(out.window[i], out.window[i + 1]);
    return out;
  }

  [[nodiscard]] bool is_right_descent(const Permutation& w, int i) const {
    check_generator(i);
    return w.window[i] > w.window[i + 1];
  }

  [[nodiscard]] Permutation right_multiply(const Permutation& w, const Reflection& t) const {
    require_valid(t);
    Permutation out = w;
    std::swap(out.window[t.i - 1], out.window[t.j - 1]);
    return out;
  }

  [[nodiscard]] bool is_inversion(const Permutation& w, const Reflection& t) const {
    require_valid(t);
    return w.window[t.i - 1] > w.window[t.j - 1];
  }

  [[nodiscard]] std::vector<Reflection> inversions(const Permutation& w) const {
    std::vector<Reflection> out;
    for (const auto& t : reflections_)
      if (w.window[t.i - 1] > w.window[t.j - 1]) out.push_back(t);
    return out;
  }

  [[nodiscard]] int length(const Permutation& w) const {
    int count = 0;
    const int n = degree();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (w.window[i] > w.window[j]) ++count;
    return count;
  }

  [[nodiscard]] Permutation multiply(const Permutation& u, const Permutation& v) const {
    Permutation out;
    out.window.reserve(v.window.size());
    for (int x : v.window) out.window.push_back(u.window[x - 1]);
    return out;
  }

  [[nodiscard]] Permutation inverse(const Permutation& w) const {
    Permutation out = w;
    for (int i = 0; i < degree(); ++i) out.window[w.window[i] - 1] = i + 1;
    return out;
  }

  [[nodiscard]] Reflection simple_reflection(int i) const {
    check_generator(i);
    return Reflection::s(i + 1, i + 2);
  }

  [[nodiscard]] bool valid_reflection(const Reflection& t) const {
    return t.kind == ReflectionKind::S && t.i >= 1 && t.i < t.j && t.j <= degree();
  }

  [[nodiscard]] Permutation reflection_element(const Reflection& t) const { return right_multiply(identity(), t); }

  [[nodiscard]] std::optional<Reflection> reflection_of(const Permutation& w) const {
    std::vector<int> moved;
    for (int i = 0; i < degree(); ++i)
      if (w.window[i] != i + 1) moved.push_back(i + 1);
    if (moved.size() != 2 || w.window[moved[0] - 1] != moved[1]) return std::nullopt;
    return Reflection::s(moved[0], moved[1]);
  }

  /// alpha_{i,j} = alpha_{i,i+1} + ... + alpha_{j-1,j}.
  [[nodiscard]] RootVector positive_root(const Reflection& t) const {
    require_valid(t);
    RootVector v = zero_root(static_cast<std::size_t>(rank_));
    for (int k = t.i; k < t.j; ++k) v[k - 1] = 1;
    return v;
  }

  [[nodiscard]] RootVector root(const Reflection& t) const { return roots_.at(static_cast<std::size_t>(reflection_index(t))); }

  /// e_i - e_j in R^{n+1}.
  [[nodiscard]] std::vector<Rational> ambient_root(const Reflection& t) const {
    require_valid(t);
    std::vector<Rational> v(static_cast<std::size_t>(degree()), Rational(0));
    v[t.i - 1] = 1;
    v[t.j - 1] = -1;
    return v;
  }

  [[nodiscard]] std::vector<std::int64_t> chamber_point(const Permutation& w) const {
    return {w.window.begin(), w.window.end()};
  }

  /// Linear form positive on the fundamental chamber; t in D(w) iff it is
  /// negative at chamber_point(w).
  [[nodiscard]] std::vector<std::int64_t> functional(const Reflection& t) const {
    require_valid(t);
    std::vector<std::int64_t> f(static_cast<std::size_t>(degree()), 0);
    f[t.i - 1] = -1;
    f[t.j - 1] = 1;
    return f;
  }

  [[nodiscard]] const std::vector<Reflection>& reflections() const { return reflections_; }
  [[nodiscard]] int reflection_index(const Reflection& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw InvalidArgument("not a reflection of " + to_string(label()) + ": " + to_string(t));
    return it->second;
  }
  [[nodiscard]] const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  [[nodiscard]] std::string generator_name(int i) const { return "s" + std::to_string(i + 1); }

 private:
  void check_generator(int i) const {
    if (i < 0 || i >= rank_) throw InvalidArgument("generator index out of range");
  }
  void require_valid(const Reflection& t) const {
    if (!valid_reflection(t)) throw InvalidArgument("not a reflection of " + to_string(label()) + ": " + to_string(t));
  }

  int rank_;
  std::vector<Reflection> reflections_;
  std::unordered_map<Reflection, int> index_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootVector> roots_;
};

}  // namespace coxlift
