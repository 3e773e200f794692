#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxlift/coxeter.hpp"

namespace coxlift {

/// Element of the affine symmetric group with period n: a bijection w of Z
/// with w(x+n) = w(x)+n and sum w(1..n) = n(n+1)/2, stored as its window
/// [w(1), ..., w(n)].
struct AffinePermutation {
  std::vector<std::int64_t> window;

  auto operator<=>(const AffinePermutation&) const = default;
};

}  // namespace coxlift

template <>
struct std::hash<coxlift::AffinePermutation> {
  std::size_t operator()(const coxlift::AffinePermutation& p) const noexcept {
    std::size_t h = 0;
    for (auto x : p.window) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }
};

namespace coxlift {

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

inline std::int64_t mod_pos(std::int64_t a, std::int64_t n) { return a - n * floor_div(a, n); }

}  // namespace detail

/// Affine symmetric group with generators s_1..s_n. For i < n, s_i swaps
/// window positions i and i+1; s_n swaps positions n and n+1, i.e. it wraps
/// around the period.
///
/// The reflection aff(i,j;m), 1 <= i < j <= n, swaps the positions i and
/// j + m n (and all their translates by multiples of n).
class AffineSymmetricGroup {
 public:
  using element_type = AffinePermutation;

  explicit AffineSymmetricGroup(int n) : n_(n) {
    validate(GroupLabel{Family::AffineA, n});
    cartan_ = simply_laced_cartan(coxeter_matrix(*this));
  }

  [[nodiscard]] GroupLabel label() const { return {Family::AffineA, n_}; }
  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] int period() const { return n_; }
  [[nodiscard]] bool is_finite() const { return false; }

  [[nodiscard]] AffinePermutation identity() const {
    AffinePermutation p;
    for (int i = 1; i <= n_; ++i) p.window.push_back(i);
    return p;
  }

  [[nodiscard]] AffinePermutation from_window(std::vector<std::int64_t> window) const {
    if (static_cast<int>(window.size()) != n_) throw InvalidArgument("window length must equal n");
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::int64_t sum = 0;
    for (auto x : window) {
      auto r = detail::mod_pos(x, n_);
      if (seen[r]) throw InvalidArgument("window residues mod n must be distinct");
      seen[r] = true;
      sum += x;
    }
    if (sum != static_cast<std::int64_t>(n_) * (n_ + 1) / 2) throw InvalidArgument("window must sum to n(n+1)/2");
    return AffinePermutation{std::move(window)};
  }

  /// w(x) for any integer position x.
  [[nodiscard]] std::int64_t value(const AffinePermutation& w, std::int64_t x) const {
    std::int64_t r = detail::mod_pos(x - 1, n_);
    return w.window[r] + (x - 1 - r);
  }

  [[nodiscard]] AffinePermutation right_multiply_simple(const AffinePermutation& w, int i) const {
    check_generator(i);
    AffinePermutation out = w;
    if (i < n_ - 1) {
      std::swap(out.window[i], out.window[i + 1]);
    } else {
      out.window[n_ - 1] = w.window[0] + n_;
      out.window[0] = w.window[n_ - 1] - n_;
    }
    return out;
  }

  [[nodiscard]] bool is_right_descent(const AffinePermutation& w, int i) const {
    check_generator(i);
    if (i < n_ - 1) return w.window[i] > w.window[i + 1];
    return w.window[n_ - 1] > w.window[0] + n_;
  }

  [[nodiscard]] AffinePermutation right_multiply(const AffinePermutation& w, const Reflection& t) const {
    require_valid(t);
    AffinePermutation out = w;
    out.window[t.i - 1] = w.window[t.j - 1] + t.m * n_;
    out.window[t.j - 1] = w.window[t.i - 1] - t.m * n_;
    return out;
  }

  /// Positions p = i and q = j + m n are inverted iff (p - q)(w(p) - w(q)) < 0.
  [[nodiscard]] bool is_inversion(const AffinePermutation& w, const Reflection& t) const {
    require_valid(t);
    std::int64_t p = t.i, q = t.j + t.m * n_;
    std::int64_t wp = w.window[t.i - 1], wq = w.window[t.j - 1] + t.m * n_;
    return (p - q) * (wp - wq) < 0;
  }

  [[nodiscard]] std::vector<Reflection> inversions(const AffinePermutation& w) const {
    std::vector<Reflection> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) {
        std::int64_t d = w.window[i - 1] - w.window[j - 1];
        if (d > 0) {
          for (std::int64_t m = 0; m * n_ < d; ++m) out.push_back(Reflection::affine(i, j, m));
        } else {
          for (std::int64_t m = detail::floor_div(d, n_) + 1; m < 0; ++m) out.push_back(Reflection::affine(i, j, m));
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Sum over pairs i < j of |floor((w(j) - w(i)) / n)|.
  [[nodiscard]] int length(const AffinePermutation& w) const {
    std::int64_t total = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        auto k = detail::floor_div(w.window[j] - w.window[i], n_);
        total += k < 0 ? -k : k;
      }
    return static_cast<int>(total);
  }

  [[nodiscard]] AffinePermutation multiply(const AffinePermutation& u, const AffinePermutation& v) const {
    AffinePermutation out;
    out.window.reserve(static_cast<std::size_t>(n_));
    for (auto x : v.window) out.window.push_back(value(u, x));
    return out;
  }

  [[nodiscard]] AffinePermutation inverse(const AffinePermutation& w) const {
    AffinePermutation out;
    out.window.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 1; i <= n_; ++i) {
      std::int64_t r = detail::mod_pos(w.window[i - 1] - 1, n_);
      std::int64_t shift = w.window[i - 1] - 1 - r;
      out.window[r] = i - shift;
    }
    return out;
  }

  [[nodiscard]] Reflection simple_reflection(int i) const {
    check_generator(i);
    if (i < n_ - 1) return Reflection::affine(i + 1, i + 2, 0);
    return Reflection::affine(1, n_, -1);
  }

  [[nodiscard]] bool valid_reflection(const Reflection& t) const {
    return t.kind == ReflectionKind::Affine && t.i >= 1 && t.i < t.j && t.j <= n_;
  }

  [[nodiscard]] AffinePermutation reflection_element(const Reflection& t) const { return right_multiply(identity(), t); }

  [[nodiscard]] std::optional<Reflection> reflection_of(const AffinePermutation& w) const {
    std::vector<int> moved;
    for (int i = 1; i <= n_; ++i)
      if (w.window[i - 1] != i) moved.push_back(i);
    if (moved.size() != 2) return std::nullopt;
    const int i = moved[0], j = moved[1];
    std::int64_t diff = w.window[i - 1] - j;
    if (detail::mod_pos(diff, n_) != 0) return std::nullopt;
    std::int64_t m = diff / n_;
    if (w.window[j - 1] != i - m * n_) return std::nullopt;
    return Reflection::affine(i, j, m);
  }

  /// Positions p < q: the root is the sum of alpha_{x mod n} over p <= x < q,
  /// with alpha_n standing for residue 0.
  [[nodiscard]] RootVector positive_root(const Reflection& t) const {
    require_valid(t);
    std::int64_t p = t.i, q = t.j + t.m * n_;
    if (p > q) std::swap(p, q);
    RootVector v = zero_root(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) {
      std::int64_t first = p + detail::mod_pos(k + 1 - p, n_);
      if (first < q) v[k] = Rational((q - 1 - first) / n_ + 1);
    }
    return v;
  }

  /// Root computed from the group action alone (conjugation peeling).
  [[nodiscard]] RootVector root(const Reflection& t) const {
    require_valid(t);
    return root_by_conjugation(*this, cartan_, t);
  }

  [[nodiscard]] const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  [[nodiscard]] std::string generator_name(int i) const { return "s" + std::to_string(i + 1); }

 private:
  void check_generator(int i) const {
    if (i < 0 || i >= n_) throw InvalidArgument("generator index out of range");
  }
  void require_valid(const Reflection& t) const {
    if (!valid_reflection(t)) throw InvalidArgument("not a reflection of " + to_string(label()) + ": " + to_string(t));
  }

  int n_;
  std::vector<std::vector<int>> cartan_;
};

}  // namespace coxlift
