#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxlift/coxeter.hpp"

namespace coxlift {

/// Element of E6/E7/E8, stored as the point w^{-1}(x0) of its chamber, where
/// x0 is a fixed interior point of the fundamental chamber. The action is
/// simply transitive on chambers, so the point is a faithful canonical form.
/// Coordinates stay integral: every reflection preserves
/// {x in Z^8 : sum(x) = 0 mod 3} and x0 lies there.
struct EElement {
  std::array<std::int64_t, 8> point{};

  auto operator<=>(const EElement&) const = default;
};

}  // namespace coxlift

template <>
struct std::hash<coxlift::EElement> {
  std::size_t operator()(const coxlift::EElement& e) const noexcept {
    std::size_t h = 0;
    for (auto x : e.point) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }
};

namespace coxlift {

namespace e8 {

using Vector = std::array<std::int64_t, 8>;
using RationalVector = std::array<Rational, 8>;
using Matrix = std::array<std::array<Rational, 8>, 8>;

inline constexpr Vector chamber_origin{100, 101, 102, 103, 104, 105, 106, 107};

/// E8 generator g (0..7) as a subset mask: s_{g+1,g+2} for g < 7, s_{1,2,3} for g = 7.
inline std::uint16_t generator_mask(int g) {
  return g < 7 ? static_cast<std::uint16_t>(3u << g) : std::uint16_t{0b111};
}

inline bool valid_mask(std::uint16_t mask) {
  int k = std::popcount(mask);
  return mask < 256 && (k == 1 || k == 2 || k == 3 || k == 6);
}

inline std::vector<std::uint16_t> all_masks() {
  std::vector<std::uint16_t> out;
  for (unsigned m = 1; m < 256; ++m)
    if (valid_mask(static_cast<std::uint16_t>(m))) out.push_back(static_cast<std::uint16_t>(m));
  return out;
}

inline std::int64_t subset_sum(std::uint16_t mask, const Vector& x) {
  std::int64_t s = 0;
  for (int k = 0; k < 8; ++k)
    if (mask & (1u << k)) s += x[k];
  return s;
}

/// The reflection s_H applied to an integral point.
inline Vector apply(std::uint16_t mask, Vector x) {
  const int size = std::popcount(mask);
  if (size == 2) {
    int i = std::countr_zero(mask);
    int j = 15 - std::countl_zero(mask);
    std::swap(x[i], x[j]);
  } else if (size == 3 || size == 6) {
    std::int64_t total = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    std::int64_t num = size * total - 9 * subset_sum(mask, x);
    if (num % 9 != 0) throw Error("E8 point left the integral lattice");
    std::int64_t d = num / 9;
    for (int k = 0; k < 8; ++k)
      if (mask & (1u << k)) x[k] += d;
  } else {
    int l = std::countr_zero(mask);
    std::int64_t xl = x[l];
    for (int k = 0; k < 8; ++k) x[k] = (k == l) ? -xl : x[k] - xl;
  }
  return x;
}

/// Same reflection on a rational vector.
inline RationalVector apply(std::uint16_t mask, RationalVector x) {
  const int size = std::popcount(mask);
  if (size == 2) {
    int i = std::countr_zero(mask);
    int j = 15 - std::countl_zero(mask);
    std::swap(x[i], x[j]);
  } else if (size == 3 || size == 6) {
    Rational total(0), partial(0);
    for (int k = 0; k < 8; ++k) {
      total += x[k];
      if (mask & (1u << k)) partial += x[k];
    }
    Rational d = Rational(size, 9) * total - partial;
    for (int k = 0; k < 8; ++k)
      if (mask & (1u << k)) x[k] += d;
  } else {
    int l = std::countr_zero(mask);
    Rational xl = x[l];
    for (int k = 0; k < 8; ++k) x[k] = (k == l) ? -xl : x[k] - xl;
  }
  return x;
}

/// Linear form positive on the fundamental chamber, vanishing on the mirror of s_H:
///   |H| = 2, H = {i<j}:  x_j - x_i
///   |H| = 3, 6:          9 Sigma_H(x) - |H| Sigma(x)
///   |H| = 1, H = {l}:    x_l
inline std::int64_t functional(std::uint16_t mask, const Vector& x) {
  const int size = std::popcount(mask);
  if (size == 2) {
    int i = std::countr_zero(mask);
    int j = 15 - std::countl_zero(mask);
    return x[j] - x[i];
  }
  if (size == 3 || size == 6) {
    std::int64_t total = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    return 9 * subset_sum(mask, x) - size * total;
  }
  return x[std::countr_zero(mask)];
}

/// Ambient root alpha_H: e_j - e_i, sum_{h in H} e_h, or e_l + sum_i e_i.
inline RationalVector ambient_root(std::uint16_t mask) {
  RationalVector v;
  v.fill(Rational(0));
  const int size = std::popcount(mask);
  if (size == 2) {
    v[std::countr_zero(mask)] = -1;
    v[15 - std::countl_zero(mask)] = 1;
  } else if (size == 3 || size == 6) {
    for (int k = 0; k < 8; ++k)
      if (mask & (1u << k)) v[k] = 1;
  } else {
    v.fill(Rational(1));
    v[std::countr_zero(mask)] = 2;
  }
  return v;
}

/// Adds alpha_{i,j} (i<j, 1-based; zero when i = j) over the E8 simple roots.
inline void add_chain(RootVector& v, int i, int j) {
  for (int k = i; k < j; ++k) v[k - 1] += 1;
}

/// Decomposition of alpha_H over (alpha_{1,2}, ..., alpha_{7,8}, alpha_{1,2,3}).
inline RootVector closed_root(std::uint16_t mask) {
  RootVector v = zero_root(8);
  std::vector<int> h;
  for (int k = 0; k < 8; ++k)
    if (mask & (1u << k)) h.push_back(k + 1);
  switch (h.size()) {
    case 2: add_chain(v, h[0], h[1]); break;
    case 3:
      v[7] += 1;
      add_chain(v, 1, h[0]);
      add_chain(v, 2, h[1]);
      add_chain(v, 3, h[2]);
      break;
    case 6:
      v[7] += 2;
      add_chain(v, 1, h[0]);
      add_chain(v, 2, h[1]);
      add_chain(v, 3, h[2]);
      add_chain(v, 1, h[3]);
      add_chain(v, 2, h[4]);
      add_chain(v, 3, h[5]);
      break;
    case 1:
      v[7] += 3;
      add_chain(v, 2, 4);
      add_chain(v, 3, 5);
      add_chain(v, 1, 6);
      add_chain(v, 2, 7);
      add_chain(v, 3, 8);
      add_chain(v, 1, h[0]);
      break;
    default: throw InvalidArgument("E8 subsets have size 1, 2, 3 or 6");
  }
  return v;
}

inline Matrix identity_matrix() {
  Matrix m;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) m[r][c] = Rational(r == c ? 1 : 0);
  return m;
}

inline Matrix reflection_matrix(std::uint16_t mask) {
  Matrix m;
  for (int c = 0; c < 8; ++c) {
    RationalVector e;
    e.fill(Rational(0));
    e[c] = 1;
    auto col = apply(mask, e);
    for (int r = 0; r < 8; ++r) m[r][c] = col[r];
  }
  return m;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  Matrix out;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      Rational s(0);
      for (int k = 0; k < 8; ++k) s += a[r][k] * b[k][c];
      out[r][c] = s;
    }
  return out;
}

inline RationalVector mat_apply(const Matrix& a, const RationalVector& x) {
  RationalVector out;
  for (int r = 0; r < 8; ++r) {
    Rational s(0);
    for (int k = 0; k < 8; ++k) s += a[r][k] * x[k];
    out[r] = s;
  }
  return out;
}

/// Exact determinant by fraction-preserving elimination.
inline Rational determinant(Matrix m) {
  Rational det(1);
  for (int c = 0; c < 8; ++c) {
    int pivot = -1;
    for (int r = c; r < 8; ++r)
      if (m[r][c].numerator() != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 8; ++r) {
      Rational f = m[r][c] / m[c][c];
      if (f.numerator() == 0) continue;
      for (int k = c; k < 8; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace e8

/// E6, E7 and E8 in the 8-dimensional realization with reflections s_H,
/// H a subset of [8] of size 1, 2, 3 or 6, and simple system
/// s_{1,2}, ..., s_{7,8}, s_{1,2,3}.
///
/// E6 and E7 are the standard parabolic subgroups: the branch node and arm
/// lengths are read off the Coxeter diagram computed from the realization and
/// the longest arm is shortened.
class ExceptionalGroup {
 public:
  using element_type = EElement;

  explicit ExceptionalGroup(int rank = 8) : rank_(rank) {
    validate(GroupLabel{Family::E, rank});
    gens_.resize(8);
    std::iota(gens_.begin(), gens_.end(), 0);
    for (std::uint16_t m : e8::all_masks()) {
      e8_reflections_.push_back(Reflection::e_subset(m));
      point_to_reflection_.emplace(e8::apply(m, e8::chamber_origin), Reflection::e_subset(m));
    }
    std::sort(e8_reflections_.begin(), e8_reflections_.end());
    reflections_ = e8_reflections_;
    for (std::size_t k = 0; k < reflections_.size(); ++k) index_.emplace(reflections_[k], static_cast<int>(k));

    auto full_coxeter = coxeter_matrix(*this);
    auto full_cartan = simply_laced_cartan(full_coxeter);
    std::map<Reflection, RootVector> full_roots;
    for (const auto& t : e8_reflections_) full_roots.emplace(t, root_by_conjugation(*this, full_cartan, t));

    gens_ = parabolic_generators(full_coxeter, rank);
    reflections_.clear();
    index_.clear();
    for (const auto& t : e8_reflections_) {
      const auto& alpha = full_roots.at(t);
      bool inside = true;
      for (int g = 0; g < 8; ++g)
        if (alpha[g].numerator() != 0 && std::find(gens_.begin(), gens_.end(), g) == gens_.end()) inside = false;
      if (!inside) continue;
      RootVector restricted;
      for (int g : gens_) restricted.push_back(alpha[g]);
      index_.emplace(t, static_cast<int>(reflections_.size()));
      reflections_.push_back(t);
      roots_.push_back(std::move(restricted));
    }
    for (auto it = point_to_reflection_.begin(); it != point_to_reflection_.end();)
      it = index_.contains(it->second) ? std::next(it) : point_to_reflection_.erase(it);
    coxeter_.assign(gens_.size(), std::vector<int>(gens_.size()));
    for (std::size_t a = 0; a < gens_.size(); ++a)
      for (std::size_t b = 0; b < gens_.size(); ++b) coxeter_[a][b] = full_coxeter[gens_[a]][gens_[b]];
    cartan_ = simply_laced_cartan(coxeter_);
  }

  [[nodiscard]] GroupLabel label() const { return {Family::E, rank_}; }
  [[nodiscard]] int rank() const { return static_cast<int>(gens_.size()); }
  [[nodiscard]] bool is_finite() const { return true; }
  /// E8 generator index (0..7) behind each of this group's generators.
  [[nodiscard]] const std::vector<int>& e8_generators() const { return gens_; }

  [[nodiscard]] EElement identity() const { return EElement{e8::chamber_origin}; }

  [[nodiscard]] EElement right_multiply_simple(const EElement& w, int i) const {
    check_generator(i);
    return EElement{e8::apply(e8::generator_mask(gens_[i]), w.point)};
  }

  [[nodiscard]] bool is_right_descent(const EElement& w, int i) const {
    check_generator(i);
    return e8::functional(e8::generator_mask(gens_[i]), w.point) < 0;
  }

  [[nodiscard]] EElement right_multiply(const EElement& w, const Reflection& t) const {
    require_valid(t);
    return EElement{e8::apply(t.subset, w.point)};
  }

  [[nodiscard]] bool is_inversion(const EElement& w, const Reflection& t) const {
    require_valid(t);
    return e8::functional(t.subset, w.point) < 0;
  }

  [[nodiscard]] std::vector<Reflection> inversions(const EElement& w) const {
    std::vector<Reflection> out;
    for (const auto& t : reflections_)
      if (e8::functional(t.subset, w.point) < 0) out.push_back(t);
    return out;
  }

  /// Number of mirrors separating the chamber of w from the fundamental one.
  [[nodiscard]] int length(const EElement& w) const {
    int count = 0;
    for (const auto& t : reflections_)
      if (e8::functional(t.subset, w.point) < 0) ++count;
    return count;
  }

  [[nodiscard]] EElement multiply(const EElement& u, const EElement& v) const { return multiply_via_word(*this, u, v); }
  [[nodiscard]] EElement inverse(const EElement& w) const { return inverse_via_word(*this, w); }

  [[nodiscard]] Reflection simple_reflection(int i) const {
    check_generator(i);
    return Reflection::e_subset(e8::generator_mask(gens_[i]));
  }

  [[nodiscard]] bool valid_reflection(const Reflection& t) const {
    return t.kind == ReflectionKind::ESubset && index_.contains(t);
  }

  [[nodiscard]] EElement reflection_element(const Reflection& t) const { return right_multiply(identity(), t); }

  [[nodiscard]] std::optional<Reflection> reflection_of(const EElement& w) const {
    auto it = point_to_reflection_.find(w.point);
    if (it == point_to_reflection_.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] RootVector positive_root(const Reflection& t) const {
    require_valid(t);
    RootVector full = e8::closed_root(t.subset);
    RootVector out;
    for (int g : gens_) out.push_back(full[g]);
    return out;
  }

  [[nodiscard]] RootVector root(const Reflection& t) const { return roots_.at(static_cast<std::size_t>(reflection_index(t))); }

  [[nodiscard]] std::vector<Rational> ambient_root(const Reflection& t) const {
    require_valid(t);
    auto v = e8::ambient_root(t.subset);
    return {v.begin(), v.end()};
  }
  [[nodiscard]] std::vector<Rational> ambient_simple_root(int i) const { return ambient_root(simple_reflection(i)); }

  [[nodiscard]] std::vector<std::int64_t> chamber_point(const EElement& w) const { return {w.point.begin(), w.point.end()}; }

  /// Integer coefficients of the linear form of t (see e8::functional).
  [[nodiscard]] std::vector<std::int64_t> functional(const Reflection& t) const {
    require_valid(t);
    std::vector<std::int64_t> f(8, 0);
    for (int k = 0; k < 8; ++k) {
      e8::Vector e{};
      e[k] = 1;
      f[k] = e8::functional(t.subset, e);
    }
    return f;
  }

  /// Exact 8x8 matrix of w acting on R^8.
  [[nodiscard]] e8::Matrix matrix(const EElement& w) const {
    e8::Matrix m = e8::identity_matrix();
    for (int s : reduced_word(*this, w)) m = e8::mat_mul(m, e8::reflection_matrix(e8::generator_mask(gens_[s])));
    return m;
  }

  [[nodiscard]] const std::vector<Reflection>& reflections() const { return reflections_; }
  [[nodiscard]] int reflection_index(const Reflection& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw InvalidArgument("not a reflection of " + to_string(label()) + ": " + to_string(t));
    return it->second;
  }
  [[nodiscard]] const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  [[nodiscard]] const std::vector<std::vector<int>>& coxeter() const { return coxeter_; }

  [[nodiscard]] std::string generator_name(int i) const {
    check_generator(i);
    int g = gens_[i];
    if (g == 7) return "s123";
    return "s" + std::to_string(g + 1) + std::to_string(g + 2);
  }

 private:
  /// Drop 8 - rank nodes from the far end of the longest arm of the E8 diagram.
  static std::vector<int> parabolic_generators(const std::vector<std::vector<int>>& coxeter, int rank) {
    const int n = static_cast<int>(coxeter.size());
    std::vector<std::vector<int>> adj(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && coxeter[a][b] == 3) adj[a].push_back(b);
    int branch = -1;
    for (int a = 0; a < n; ++a)
      if (adj[a].size() == 3) branch = a;
    if (branch < 0) throw Error("E8 diagram has no branch node");
    std::vector<std::vector<int>> arms;
    for (int start : adj[branch]) {
      std::vector<int> arm{start};
      int prev = branch, cur = start;
      while (true) {
        int next = -1;
        for (int x : adj[cur])
          if (x != prev) next = x;
        if (next < 0) break;
        arm.push_back(next);
        prev = cur;
        cur = next;
      }
      arms.push_back(std::move(arm));
    }
    std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    if (arms[0].size() != 1 || arms[1].size() != 2 || arms[2].size() != 4) throw Error("diagram is not of type E8");
    std::set<int> drop(arms[2].end() - (8 - rank), arms[2].end());
    std::vector<int> keep;
    for (int a = 0; a < n; ++a)
      if (!drop.contains(a)) keep.push_back(a);
    return keep;
  }

  void check_generator(int i) const {
    if (i < 0 || i >= rank()) throw InvalidArgument("generator index out of range");
  }
  void require_valid(const Reflection& t) const {
    if (!valid_reflection(t)) throw InvalidArgument("not a reflection of " + to_string(label()) + ": " + to_string(t));
  }

  int rank_;
  std::vector<int> gens_;
  std::vector<Reflection> e8_reflections_;
  std::vector<Reflection> reflections_;
  std::unordered_map<Reflection, int> index_;
  std::map<e8::Vector, Reflection> point_to_reflection_;
  std::vector<RootVector> roots_;
  std::vector<std::vector<int>> coxeter_;
  std::vector<std::vector<int>> cartan_;
};

}  // namespace coxlift
