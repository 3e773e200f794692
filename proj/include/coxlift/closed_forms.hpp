#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "coxlift/error.hpp"
#include "coxlift/label.hpp"
#include "coxlift/reflection.hpp"

// Explicit descriptions of the root order, of conjugation r -> r^t, of D(t)
// and of the simple reflection used in the inductive GLP step, for D_n and
// for the E-types (E6 and E7 reuse the E8 rules: their reflections are E8
// reflections and D(t) of a parabolic element stays in the parabolic).

namespace coxlift::closed {

namespace detail {

inline void require_supported(const GroupLabel& label) {
  if (label.family != Family::D && label.family != Family::E)
    throw Unsupported("closed forms exist for type D and E only, not " + to_string(label));
}

/// The other element of I = {i,j}.
inline int other(int x, int i, int j) { return x == i ? j : i; }

inline std::vector<int> elems(std::uint16_t mask) {
  std::vector<int> out;
  for (int h = 1; h <= 8; ++h)
    if (mask & (1u << (h - 1))) out.push_back(h);
  return out;
}

inline std::uint16_t bit(int h) { return static_cast<std::uint16_t>(1u << (h - 1)); }

inline constexpr std::uint16_t kAll = 0xFF;

inline bool d_leq(const Reflection& r, const Reflection& t) {
  if (r == t) return true;
  const int i = r.i, j = r.j, h = t.i, k = t.j;
  if (r.kind == ReflectionKind::S && t.kind == ReflectionKind::S) return h <= i && j <= k;
  if (r.kind == ReflectionKind::S && t.kind == ReflectionKind::T) return !(i == 1 && h == 1) && j <= k;
  if (r.kind == ReflectionKind::T && t.kind == ReflectionKind::T) return i <= h && j <= k;
  return false;
}

inline bool e_leq(const Reflection& r, const Reflection& t) {
  if (r == t) return true;
  const auto a = elems(r.subset), b = elems(t.subset);
  const std::size_t p = a.size(), q = b.size();
  auto pointwise = [&] {
    for (std::size_t k = 0; k < p; ++k)
      if (a[k] > b[k]) return false;
    return true;
  };
  if (p == 2 && q == 2) return b[0] <= a[0] && a[1] <= b[1];
  if (p == 2 && q == 3) return a[1] <= b[2] && !(a[0] == 1 && b[0] == 1) && !(a[0] == 2 && b[1] == 2);
  if (p == 2 && q == 6) return a[1] <= b[5];
  if (p == 2 && q == 1) return true;
  if (p == 3 && q == 3) return pointwise();
  if (p == 3 && q == 6) return a[0] <= b[3] && a[1] <= b[4] && a[2] <= b[5];
  if (p == 3 && q == 1) return true;
  if (p == 6 && q == 6) return pointwise();
  if (p == 6 && q == 1) return a[0] <= b[0];
  if (p == 1 && q == 1) return a[0] <= b[0];
  return false;
}

inline Reflection d_conjugate(const Reflection& r, const Reflection& t) {
  const int i = t.i, j = t.j;
  const bool a_in = r.i == i || r.i == j;
  const bool b_in = r.j == i || r.j == j;
  if (a_in == b_in) return r;
  const int x = a_in ? r.i : r.j;
  const int h = a_in ? r.j : r.i;
  const int xbar = other(x, i, j);
  ReflectionKind kind = r.kind;
  if (t.kind == ReflectionKind::T) kind = kind == ReflectionKind::S ? ReflectionKind::T : ReflectionKind::S;
  return kind == ReflectionKind::S ? Reflection::s(h, xbar) : Reflection::t(h, xbar);
}

inline Reflection e_conjugate(const Reflection& r, const Reflection& t) {
  const std::uint16_t H = r.subset, L = t.subset;
  const int n = std::popcount(L), meet = std::popcount(static_cast<std::uint16_t>(H & L)), h = std::popcount(H);
  const std::uint16_t comp = static_cast<std::uint16_t>(kAll & ~H);
  auto out = [](std::uint16_t m) { return Reflection::e_subset(m); };
  switch (n) {
    case 1:
      if ((meet == 0 && h != 1) || H == L) return r;
      if ((meet == 0 && h == 1) || (meet == 1 && h == 2)) return out(H ^ L);
      return out(comp ^ L);
    case 6:
      if (meet % 2 == 0) return r;
      if (meet == 3 || meet == 5 || (meet == 1 && h == 2)) return out(H ^ L);
      return out(comp ^ L);
    case 3:
      if ((meet == 0 && (h == 1 || h == 2)) || (meet == 2 && (h == 2 || h == 6)) || (meet == 1 && h == 3) ||
          (meet == 3 && h == 3))
        return r;
      if ((meet == 2 && h == 3) || (meet == 1 && h == 2) || (meet == 3 && h == 6) || (meet == 0 && h == 3))
        return out(H ^ L);
      return out(comp ^ L);
    default:
      return meet == 1 ? out(H ^ L) : r;
  }
}

inline std::vector<Reflection> d_dset(const Reflection& t) {
  std::set<Reflection> out{t};
  const int i = t.i, j = t.j;
  if (t.kind == ReflectionKind::S) {
    for (int h = i + 1; h < j; ++h) {
      out.insert(Reflection::s(h, i));
      out.insert(Reflection::s(h, j));
    }
  } else {
    for (int x : {i, j})
      for (int h = 1; h < x; ++h) {
        if (h == i || h == j) continue;
        out.insert(Reflection::s(h, x));
        out.insert(Reflection::t(h, other(x, i, j)));
      }
  }
  return {out.begin(), out.end()};
}

inline std::vector<Reflection> e_dset(const Reflection& t) {
  std::set<Reflection> out{t};
  const std::uint16_t T = t.subset;
  const auto e = elems(T);
  auto add = [&](std::uint16_t m) { out.insert(Reflection::e_subset(m)); };
  switch (e.size()) {
    case 1: {
      const int l = e[0];
      for (int h = 1; h < l; ++h) {
        add(static_cast<std::uint16_t>(bit(h) | bit(l)));
        add(bit(h));
      }
      for (unsigned m = 1; m < 256; ++m) {
        const int size = std::popcount(m);
        if ((size == 3 || size == 6) && (m & T)) add(static_cast<std::uint16_t>(m));
      }
      break;
    }
    case 6:
      for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j)
          if (!(T & bit(i)) && (T & bit(j))) {
            const auto I = static_cast<std::uint16_t>(bit(i) | bit(j));
            add(I);
            add(static_cast<std::uint16_t>(T ^ I));
          }
      for (unsigned m = 1; m < 256; ++m)
        if (std::popcount(m) == 3 && (m & T) == m) add(static_cast<std::uint16_t>(m));
      break;
    case 3:
      for (int j : e)
        for (int h = 1; h < j; ++h)
          if (!(T & bit(h))) {
            const auto I = static_cast<std::uint16_t>(bit(h) | bit(j));
            add(I);
            add(static_cast<std::uint16_t>(I ^ T));
          }
      break;
    default:
      for (int h = e[0] + 1; h < e[1]; ++h) {
        add(static_cast<std::uint16_t>(bit(e[0]) | bit(h)));
        add(static_cast<std::uint16_t>(bit(h) | bit(e[1])));
      }
  }
  return {out.begin(), out.end()};
}

/// Smallest i with i not in H and i+1 in H.
inline int first_gap(std::uint16_t H) {
  for (int i = 1; i < 8; ++i)
    if (!(H & bit(i)) && (H & bit(i + 1))) return i;
  throw Error("subset has no gap");
}

}  // namespace detail

inline bool refl_leq(const GroupLabel& label, const Reflection& r, const Reflection& t) {
  detail::require_supported(label);
  return label.family == Family::D ? detail::d_leq(r, t) : detail::e_leq(r, t);
}

/// r^t.
inline Reflection conjugate(const GroupLabel& label, const Reflection& r, const Reflection& t) {
  detail::require_supported(label);
  return label.family == Family::D ? detail::d_conjugate(r, t) : detail::e_conjugate(r, t);
}

/// D(t) for a reflection t, sorted.
inline std::vector<Reflection> d_of_reflection(const GroupLabel& label, const Reflection& t) {
  detail::require_supported(label);
  return label.family == Family::D ? detail::d_dset(t) : detail::e_dset(t);
}

inline bool is_simple(const GroupLabel& label, const Reflection& t) {
  detail::require_supported(label);
  if (label.family == Family::D)
    return (t.kind == ReflectionKind::S && t.j == t.i + 1) || (t.kind == ReflectionKind::T && t.i == 1 && t.j == 2);
  const auto e = detail::elems(t.subset);
  return (e.size() == 2 && e[1] == e[0] + 1) || t.subset == 0b111;
}

/// The simple reflection s in D(t) with s^t = t^s used in the inductive step
/// of the GLP proof.
inline Reflection select_s(const GroupLabel& label, const Reflection& t) {
  if (is_simple(label, t)) throw PreconditionError("select_s needs a non-simple reflection, got " + to_string(t));
  if (label.family == Family::D) {
    if (t.kind == ReflectionKind::S) return Reflection::s(t.j - 1, t.j);
    return t.i > 1 ? Reflection::s(t.i - 1, t.i) : Reflection::s(t.j - 1, t.j);
  }
  const auto e = detail::elems(t.subset);
  auto pair = [](int a, int b) { return Reflection::e_subset(static_cast<std::uint16_t>(detail::bit(a) | detail::bit(b))); };
  switch (e.size()) {
    case 2: return pair(e[1] - 1, e[1]);
    case 3: {
      int i = detail::first_gap(t.subset);
      return pair(i, i + 1);
    }
    case 6: {
      if (t.subset == 0b111111) return Reflection::e_subset(0b111);
      int i = detail::first_gap(t.subset);
      return pair(i, i + 1);
    }
    default:
      if (e[0] == 1) return Reflection::e_subset(0b111);
      return pair(e[0] - 1, e[0]);
  }
}

}  // namespace coxlift::closed
