#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "coxlift/closed_forms.hpp"
#include "coxlift/coxeter.hpp"

namespace coxlift {

enum class Mode { Generic, Closed };

template <FiniteCoxeterGroup G>
std::vector<Reflection> all_reflections(const G& g) {
  return g.reflections();
}

/// r <= t in the root poset. Generic mode compares the roots computed from
/// the group action coefficientwise; closed mode applies the explicit rules
/// for D_n and E-types.
template <CoxeterGroup G>
bool refl_leq(const G& g, const Reflection& r, const Reflection& t, Mode mode = Mode::Generic) {
  if (mode == Mode::Closed) return closed::refl_leq(g.label(), r, t);
  if (r == t) return true;
  return dominates(g.root(t), g.root(r));
}

/// r^t = t r t.
template <CoxeterGroup G>
Reflection conjugate(const G& g, const Reflection& r, const Reflection& t, Mode mode = Mode::Generic) {
  if (mode == Mode::Closed) return closed::conjugate(g.label(), r, t);
  return conjugate_label(g, g.reflection_element(t), r);
}

/// D(w) = {t : l(wt) < l(w)}, sorted.
template <CoxeterGroup G>
std::vector<Reflection> d_set(const G& g, const element_t<G>& w) {
  auto out = g.inversions(w);
  std::sort(out.begin(), out.end());
  return out;
}

/// AD(u,v) = A(u) n D(v).
template <CoxeterGroup G>
std::vector<Reflection> ad_set(const G& g, const element_t<G>& u, const element_t<G>& v) {
  std::vector<Reflection> out;
  for (const auto& t : d_set(g, v))
    if (!g.is_inversion(u, t)) out.push_back(t);
  return out;
}

template <CoxeterGroup G>
std::vector<Reflection> d_of_reflection(const G& g, const Reflection& t, Mode mode = Mode::Closed) {
  if (mode == Mode::Closed) return closed::d_of_reflection(g.label(), t);
  return d_set(g, g.reflection_element(t));
}

/// Whether t maps the positive halfspace of r onto the negative halfspace of
/// r^t, decided by the sign of the functional of r^t at t(x0).
template <FiniteCoxeterGroup G>
bool halfspace_flip(const G& g, const Reflection& t, const Reflection& r) {
  auto rt = conjugate(g, r, t);
  auto f = g.functional(rt);
  auto y = g.chamber_point(g.reflection_element(t));
  std::int64_t value = 0;
  for (std::size_t k = 0; k < f.size(); ++k) value += f[k] * y[k];
  return value < 0;
}

/// Precomputed reflection data of a finite group: indices, the root order
/// and the conjugation table, all from the generic (action-based) routes.
/// Shared read-only between workers.
template <CoxeterGroup G>
class RootPoset {
 public:
  explicit RootPoset(const G& g)
    requires FiniteCoxeterGroup<G>
      : refl_(g.reflections()) {
    const std::size_t n = refl_.size();
    for (std::size_t k = 0; k < n; ++k) index_.emplace(refl_[k], static_cast<int>(k));
    std::vector<RootVector> roots;
    for (const auto& t : refl_) roots.push_back(g.root(t));
    leq_.assign(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) leq_[a * n + b] = a == b || dominates(roots[b], roots[a]);
    conj_.assign(n * n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      auto tb = g.reflection_element(refl_[b]);
      for (std::size_t a = 0; a < n; ++a) conj_[a * n + b] = index(conjugate_label(g, tb, refl_[a]));
    }
  }

  [[nodiscard]] std::size_t size() const { return refl_.size(); }
  [[nodiscard]] const Reflection& at(int k) const { return refl_[static_cast<std::size_t>(k)]; }
  [[nodiscard]] int index(const Reflection& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw InvalidArgument("unknown reflection " + to_string(t));
    return it->second;
  }
  [[nodiscard]] bool leq(const Reflection& r, const Reflection& t) const {
    return leq_[static_cast<std::size_t>(index(r)) * refl_.size() + static_cast<std::size_t>(index(t))];
  }
  [[nodiscard]] Reflection conjugate(const Reflection& r, const Reflection& t) const {
    return refl_[static_cast<std::size_t>(
        conj_[static_cast<std::size_t>(index(r)) * refl_.size() + static_cast<std::size_t>(index(t))])];
  }

 private:
  std::vector<Reflection> refl_;
  std::unordered_map<Reflection, int> index_;
  std::vector<bool> leq_;
  std::vector<int> conj_;
};

/// Uniform access to the root order and conjugation, with or without a
/// precomputed table.
template <CoxeterGroup G>
struct RootOracle {
  const G& g;
  const RootPoset<G>* table = nullptr;

  [[nodiscard]] bool leq(const Reflection& r, const Reflection& t) const {
    return table ? table->leq(r, t) : refl_leq(g, r, t);
  }
  [[nodiscard]] Reflection conjugate(const Reflection& r, const Reflection& t) const {
    return table ? table->conjugate(r, t) : coxlift::conjugate(g, r, t);
  }
};

}  // namespace coxlift
