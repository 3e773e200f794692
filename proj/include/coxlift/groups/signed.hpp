#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxlift/coxeter.hpp"

namespace coxlift {

/// Element of B_n or D_n in window notation (w(1),...,w(n)).
struct SignedPermutation {
  std::vector<int> window;
  Family family = Family::B;

  auto operator<=>(const SignedPermutation&) const = default;
};

}  // namespace coxlift

template <>
struct std::hash<coxlift::SignedPermutation> {
  std::size_t operator()(const coxlift::SignedPermutation& p) const noexcept {
    std::size_t h = static_cast<std::size_t>(p.family);
    for (int x : p.window) h = h * 131 + static_cast<std::size_t>(x + 64);
    return h;
  }
};

namespace coxlift {

/// B_n and D_n as signed permutations.
///
/// Generators, in order: s_{1,2}, ..., s_{n-1,n}, then the extra node, which
/// is t_{1,2} = [-2,-1,3,...] for D_n and the sign change b(1) = [-1,2,...]
/// for B_n. Right multiplication acts on window positions.
class SignedPermutationGroup {
 public:
  using element_type = SignedPermutation;

  SignedPermutationGroup(Family family, int rank) : family_(family), n_(rank) {
    if (family != Family::B && family != Family::D) throw InvalidArgument("signed permutations realize B or D only");
    validate(GroupLabel{family, rank});
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) reflections_.push_back(Reflection::s(i, j));
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) reflections_.push_back(Reflection::t(i, j));
    if (family_ == Family::B)
      for (int i = 1; i <= n_; ++i) reflections_.push_back(Reflection::sign(i));
    for (std::size_t k = 0; k < reflections_.size(); ++k) index_.emplace(reflections_[k], static_cast<int>(k));

    cartan_.assign(n_, std::vector<int>(n_, 0));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        auto a = ambient_simple_root(i), b = ambient_simple_root(j);
        Rational ab(0), bb(0);
        for (int k = 0; k < n_; ++k) {
          ab += a[k] * b[k];
          bb += b[k] * b[k];
        }
        Rational c = Rational(2) * ab / bb;
        cartan_[i][j] = static_cast<int>(c.numerator());
      }
    for (const auto& t : reflections_) roots_.push_back(root_by_conjugation(*this, cartan_, t));
  }

  [[nodiscard]] GroupLabel label() const { return {family_, n_}; }
  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] bool is_finite() const { return true; }
  [[nodiscard]] Family family() const { return family_; }

  [[nodiscard]] SignedPermutation identity() const {
    SignedPermutation p;
    p.family = family_;
    for (int i = 1; i <= n_; ++i) p.window.push_back(i);
    return p;
  }

  [[nodiscard]] SignedPermutation from_window(std::vector<int> window) const {
    if (static_cast<int>(window.size()) != n_) throw InvalidArgument("window length must equal the rank");
    std::vector<bool> seen(static_cast<std::size_t>(n_ + 1), false);
    int negatives = 0;
    for (int x : window) {
      int a = std::abs(x);
      if (a < 1 || a > n_ || seen[a]) throw InvalidArgument("absolute values must form a permutation of [n]");
      seen[a] = true;
      if (x < 0) ++negatives;
    }
    if (family_ == Family::D && negatives % 2 != 0)
      throw InvalidArgument("type D windows need an even number of negative entries");
    return SignedPermutation{std::move(window), family_};
  }

  [[nodiscard]] SignedPermutation right_multiply_simple(const SignedPermutation& w, int i) const {
    check_generator(i);
    return right_multiply(w, simple_reflection(i));
  }

  [[nodiscard]] bool is_right_descent(const SignedPermutation& w, int i) const {
    check_generator(i);
    return is_inversion(w, simple_reflection(i));
  }

  [[nodiscard]] SignedPermutation right_multiply(const SignedPermutation& w, const Reflection& t) const {
    require_valid(t);
    SignedPermutation out = w;
    auto& x = out.window;
    switch (t.kind) {
      case ReflectionKind::S: std::swap(x[t.i - 1], x[t.j - 1]); break;
      case ReflectionKind::T: {
        int a = x[t.i - 1], b = x[t.j - 1];
        x[t.i - 1] = -b;
        x[t.j - 1] = -a;
        break;
      }
      case ReflectionKind::BSign: x[t.i - 1] = -x[t.i - 1]; break;
      default: break;
    }
    return out;
  }

  /// s_{i,j} in D(w) iff w(i) > w(j); t_{i,j} iff w(i)+w(j) < 0; b(i) iff w(i) < 0.
  [[nodiscard]] bool is_inversion(const SignedPermutation& w, const Reflection& t) const {
    require_valid(t);
    const auto& x = w.window;
    switch (t.kind) {
      case ReflectionKind::S: return x[t.i - 1] > x[t.j - 1];
      case ReflectionKind::T: return x[t.i - 1] + x[t.j - 1] < 0;
      case ReflectionKind::BSign: return x[t.i - 1] < 0;
      default: return false;
    }
  }

  [[nodiscard]] std::vector<Reflection> inversions(const SignedPermutation& w) const {
    std::vector<Reflection> out;
    for (const auto& t : reflections_)
      if (is_inversion(w, t)) out.push_back(t);
    return out;
  }

  [[nodiscard]] int length(const SignedPermutation& w) const {
    const auto& x = w.window;
    int count = 0;
    for (int i = 0; i < n_; ++i) {
      if (family_ == Family::B && x[i] < 0) ++count;
      for (int j = i + 1; j < n_; ++j) {
        if (x[i] > x[j]) ++count;
        if (x[i] + x[j] < 0) ++count;
      }
    }
    return count;
  }

  [[nodiscard]] SignedPermutation multiply(const SignedPermutation& u, const SignedPermutation& v) const {
    SignedPermutation out;
    out.family = family_;
    out.window.reserve(v.window.size());
    for (int x : v.window) out.window.push_back(x > 0 ? u.window[x - 1] : -u.window[-x - 1]);
    return out;
  }

  [[nodiscard]] SignedPermutation inverse(const SignedPermutation& w) const {
    SignedPermutation out = w;
    for (int i = 0; i < n_; ++i) {
      int x = w.window[i];
      out.window[std::abs(x) - 1] = x > 0 ? i + 1 : -(i + 1);
    }
    return out;
  }

  [[nodiscard]] Reflection simple_reflection(int i) const {
    check_generator(i);
    if (i < n_ - 1) return Reflection::s(i + 1, i + 2);
    return family_ == Family::D ? Reflection::t(1, 2) : Reflection::sign(1);
  }

  [[nodiscard]] bool valid_reflection(const Reflection& t) const {
    switch (t.kind) {
      case ReflectionKind::S:
      case ReflectionKind::T: return t.i >= 1 && t.i < t.j && t.j <= n_;
      case ReflectionKind::BSign: return family_ == Family::B && t.i >= 1 && t.i <= n_;
      default: return false;
    }
  }

  [[nodiscard]] SignedPermutation reflection_element(const Reflection& t) const { return right_multiply(identity(), t); }

  [[nodiscard]] std::optional<Reflection> reflection_of(const SignedPermutation& w) const {
    std::vector<int> moved;
    for (int i = 0; i < n_; ++i)
      if (w.window[i] != i + 1) moved.push_back(i + 1);
    const auto& x = w.window;
    if (moved.size() == 1 && family_ == Family::B && x[moved[0] - 1] == -moved[0]) return Reflection::sign(moved[0]);
    if (moved.size() != 2) return std::nullopt;
    int p = moved[0], q = moved[1];
    if (x[p - 1] == q && x[q - 1] == p) return Reflection::s(p, q);
    if (x[p - 1] == -q && x[q - 1] == -p) return Reflection::t(p, q);
    return std::nullopt;
  }

  /// Closed decompositions over (alpha_{1,2}, ..., alpha_{n-1,n}, extra):
  ///   alpha_{i,j} = sum_{k=i}^{j-1} alpha_{k,k+1}
  ///   D: beta_{i,j} = beta_{1,2} + sum_{k=1}^{i-1} alpha_{k,k+1} + sum_{k=2}^{j-1} alpha_{k,k+1}
  ///   B: gamma_i = gamma_1 + sum_{k<i} alpha_{k,k+1},
  ///      beta_{i,j} = 2 gamma_1 + 2 sum_{k<i} alpha_{k,k+1} + sum_{k=i}^{j-1} alpha_{k,k+1}
  [[nodiscard]] RootVector positive_root(const Reflection& t) const {
    require_valid(t);
    RootVector v = zero_root(static_cast<std::size_t>(n_));
    const int extra = n_ - 1;
    switch (t.kind) {
      case ReflectionKind::S:
        for (int k = t.i; k < t.j; ++k) v[k - 1] += 1;
        break;
      case ReflectionKind::T:
        if (family_ == Family::D) {
          v[extra] += 1;
          for (int k = 1; k < t.i; ++k) v[k - 1] += 1;
          for (int k = 2; k < t.j; ++k) v[k - 1] += 1;
        } else {
          v[extra] += 2;
          for (int k = 1; k < t.i; ++k) v[k - 1] += 2;
          for (int k = t.i; k < t.j; ++k) v[k - 1] += 1;
        }
        break;
      case ReflectionKind::BSign:
        v[extra] += 1;
        for (int k = 1; k < t.i; ++k) v[k - 1] += 1;
        break;
      default: break;
    }
    return v;
  }

  [[nodiscard]] RootVector root(const Reflection& t) const { return roots_.at(static_cast<std::size_t>(reflection_index(t))); }

  /// alpha_{i,j} = e_i - e_j, beta_{i,j} = -e_i - e_j, gamma_i = -e_i.
  [[nodiscard]] std::vector<Rational> ambient_root(const Reflection& t) const {
    require_valid(t);
    std::vector<Rational> v(static_cast<std::size_t>(n_), Rational(0));
    switch (t.kind) {
      case ReflectionKind::S:
        v[t.i - 1] = 1;
        v[t.j - 1] = -1;
        break;
      case ReflectionKind::T:
        v[t.i - 1] = -1;
        v[t.j - 1] = -1;
        break;
      case ReflectionKind::BSign: v[t.i - 1] = -1; break;
      default: break;
    }
    return v;
  }

  [[nodiscard]] std::vector<Rational> ambient_simple_root(int i) const { return ambient_root(simple_reflection(i)); }

  [[nodiscard]] std::vector<std::int64_t> chamber_point(const SignedPermutation& w) const {
    return {w.window.begin(), w.window.end()};
  }

  [[nodiscard]] std::vector<std::int64_t> functional(const Reflection& t) const {
    require_valid(t);
    std::vector<std::int64_t> f(static_cast<std::size_t>(n_), 0);
    switch (t.kind) {
      case ReflectionKind::S:
        f[t.i - 1] = -1;
        f[t.j - 1] = 1;
        break;
      case ReflectionKind::T:
        f[t.i - 1] = 1;
        f[t.j - 1] = 1;
        break;
      case ReflectionKind::BSign: f[t.i - 1] = 1; break;
      default: break;
    }
    return f;
  }

  [[nodiscard]] const std::vector<Reflection>& reflections() const { return reflections_; }
  [[nodiscard]] int reflection_index(const Reflection& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw InvalidArgument("not a reflection of " + to_string(label()) + ": " + to_string(t));
    return it->second;
  }
  [[nodiscard]] const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  [[nodiscard]] std::string generator_name(int i) const {
    check_generator(i);
    if (i < n_ - 1) return "s" + std::to_string(i + 1);
    return family_ == Family::D ? "t12" : "b1";
  }

 private:
  void check_generator(int i) const {
    if (i < 0 || i >= n_) throw InvalidArgument("generator index out of range");
  }
  void require_valid(const Reflection& t) const {
    if (!valid_reflection(t)) throw InvalidArgument("not a reflection of " + to_string(label()) + ": " + to_string(t));
  }

  Family family_;
  int n_;
  std::vector<Reflection> reflections_;
  std::unordered_map<Reflection, int> index_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootVector> roots_;
};

}  // namespace coxlift
