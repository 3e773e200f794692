#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "coxlift/coxlift.hpp"
#include "oracles.hpp"

using namespace coxlift;
using oracle::Q;

namespace {

const SignedPermutationGroup& D4() {
  static const SignedPermutationGroup g(Family::D, 4);
  return g;
}
const SignedPermutationGroup& D5() {
  static const SignedPermutationGroup g(Family::D, 5);
  return g;
}
const ExceptionalGroup& E8() {
  static const ExceptionalGroup g(8);
  return g;
}

Reflection H(std::initializer_list<int> elems) { return Reflection::e_subset(elems); }

std::vector<Q> q_vec(const std::vector<Rational>& v) { return {v.begin(), v.end()}; }

bool same(const RootVector& a, const std::vector<Q>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return false;
  return true;
}

// -- type D from the window definitions --------------------------------

std::vector<Q> d_ambient(int n, const Reflection& t) {
  std::vector<Q> v(static_cast<std::size_t>(n), Q(0));
  if (t.kind == ReflectionKind::S) {
    v[t.i - 1] = 1;
    v[t.j - 1] = -1;
  } else {
    v[t.i - 1] = -1;
    v[t.j - 1] = -1;
  }
  return v;
}

// simple roots in generator order: e_k - e_{k+1}, then -e_1 - e_2
std::vector<std::vector<Q>> d_simple(int n) {
  std::vector<std::vector<Q>> out;
  for (int k = 1; k < n; ++k) out.push_back(d_ambient(n, Reflection::s(k, k + 1)));
  out.push_back(d_ambient(n, Reflection::t(1, 2)));
  return out;
}

std::vector<int> d_window(int n, const Reflection& t) {
  return oracle::d_reflection_window(n, t.i, t.j, t.kind == ReflectionKind::T);
}

std::vector<Reflection> d_all(int n) {
  std::vector<Reflection> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.push_back(Reflection::s(i, j));
      out.push_back(Reflection::t(i, j));
    }
  return out;
}

bool d_in_dset(int n, const Reflection& r, const Reflection& t) {
  auto tw = d_window(n, t);
  return oracle::signed_length(oracle::compose(tw, d_window(n, r)), false) < oracle::signed_length(tw, false);
}

Reflection d_conj(int n, const Reflection& r, const Reflection& t) {
  auto tw = d_window(n, t);
  auto w = oracle::compose(oracle::compose(tw, d_window(n, r)), tw);
  for (const auto& x : d_all(n))
    if (d_window(n, x) == w) return x;
  throw std::runtime_error("not a reflection");
}

// the stated description of the order on D_n reflections
bool d_rule(const Reflection& r, const Reflection& t) {
  if (r == t) return true;
  const int i = r.i, j = r.j, h = t.i, k = t.j;
  if (r.kind == ReflectionKind::S && t.kind == ReflectionKind::S) return h <= i && j <= k;
  if (r.kind == ReflectionKind::S) return !(i == 1 && h == 1) && j <= k;
  if (t.kind == ReflectionKind::T) return i <= h && j <= k;
  return false;
}

// -- E8 from the defining formulas -------------------------------------

oracle::Vec8 x_base() {
  oracle::Vec8 x;
  for (int k = 0; k < 8; ++k) x[k] = 100 + k;
  return x;
}

std::vector<Q> e8_coords(unsigned mask) {
  std::vector<std::vector<Q>> basis;
  for (int k = 0; k < 7; ++k) {
    auto r = oracle::e8_root((1u << k) | (1u << (k + 1)));
    basis.emplace_back(r.begin(), r.end());
  }
  auto r = oracle::e8_root(0b111);
  basis.emplace_back(r.begin(), r.end());
  auto target = oracle::e8_root(mask);
  return oracle::coordinates(basis, {target.begin(), target.end()});
}

bool e8_in_dset(unsigned r, unsigned t) {
  auto x = x_base();
  return oracle::e8_length(oracle::e8_reflect(t, oracle::e8_reflect(r, x))) <
         oracle::e8_length(oracle::e8_reflect(t, x));
}

unsigned e8_conj(unsigned r, unsigned t) {
  auto image = oracle::e8_reflect(t, oracle::e8_root(r));
  for (unsigned m : oracle::e8_subsets()) {
    auto root = oracle::e8_root(m);
    bool plus = true, minus = true;
    for (int k = 0; k < 8; ++k) {
      plus = plus && root[k] == image[k];
      minus = minus && root[k] == -image[k];
    }
    if (plus || minus) return m;
  }
  throw std::runtime_error("image is not a root");
}

// the stated description of the order on E8 reflections, by subset sizes
bool e8_rule(const Reflection& r, const Reflection& t) {
  if (r == t) return true;
  auto a = r.subset_elements(), b = t.subset_elements();
  auto p = a.size(), q = b.size();
  if (p == 2 && q == 2) return b[0] <= a[0] && a[1] <= b[1];
  if (p == 2 && q == 3) return a[1] <= b[2] && !(a[0] == 1 && b[0] == 1) && !(a[0] == 2 && b[1] == 2);
  if (p == 2 && q == 6) return a[1] <= b[5];
  if (p == 2 && q == 1) return true;
  if (p == 3 && q == 3) return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
  if (p == 3 && q == 6) return a[0] <= b[3] && a[1] <= b[4] && a[2] <= b[5];
  if (p == 3 && q == 1) return true;
  if (p == 6 && q == 6) {
    for (int k = 0; k < 6; ++k)
      if (a[k] > b[k]) return false;
    return true;
  }
  if (p == 6 && q == 1) return a[0] <= b[0];
  if (p == 1 && q == 1) return a[0] <= b[0];
  return false;
}

}  // namespace

TEST(Reflections, Counts) {
  EXPECT_EQ(all_reflections(SymmetricGroup(2)).size(), 3u);
  EXPECT_EQ(all_reflections(D4()).size(), 12u);
  EXPECT_EQ(all_reflections(SignedPermutationGroup(Family::B, 3)).size(), 9u);
  EXPECT_EQ(all_reflections(E8()).size(), 120u);
  EXPECT_EQ(all_reflections(ExceptionalGroup(6)).size(), 36u);
  int s = 0, t = 0;
  for (const auto& r : all_reflections(D4())) (r.kind == ReflectionKind::S ? s : t)++;
  EXPECT_EQ(s, 6);
  EXPECT_EQ(t, 6);
}

TEST(Roots, TypeDDecompositions) {
  for (int n : {4, 5, 6}) {
    SignedPermutationGroup g(Family::D, n);
    for (const auto& t : g.reflections()) {
      std::vector<Q> expect(static_cast<std::size_t>(n), Q(0));
      if (t.kind == ReflectionKind::S) {
        for (int k = t.i; k < t.j; ++k) expect[k - 1] += 1;
      } else {
        expect[n - 1] += 1;
        for (int k = 1; k < t.i; ++k) expect[k - 1] += 1;
        for (int k = 2; k < t.j; ++k) expect[k - 1] += 1;
      }
      EXPECT_TRUE(same(g.positive_root(t), expect)) << to_string(t);
      EXPECT_TRUE(same(g.root(t), expect)) << to_string(t);
      EXPECT_EQ(oracle::coordinates(d_simple(n), d_ambient(n, t)), expect) << to_string(t);
    }
  }
}

TEST(Roots, E8Decompositions) {
  auto chain = [](std::vector<Q>& v, int i, int j) {
    for (int k = i; k < j; ++k) v[k - 1] += 1;
  };
  for (unsigned m : oracle::e8_subsets()) {
    auto t = Reflection::e_subset(static_cast<std::uint16_t>(m));
    auto e = t.subset_elements();
    std::vector<Q> expect(8, Q(0));
    switch (e.size()) {
      case 2: chain(expect, e[0], e[1]); break;
      case 3:
        expect[7] += 1;
        for (int k = 0; k < 3; ++k) chain(expect, k + 1, e[k]);
        break;
      case 6:
        expect[7] += 2;
        for (int k = 0; k < 6; ++k) chain(expect, k % 3 + 1, e[k]);
        break;
      default:
        expect[7] += 3;
        chain(expect, 2, 4);
        chain(expect, 3, 5);
        chain(expect, 1, 6);
        chain(expect, 2, 7);
        chain(expect, 3, 8);
        chain(expect, 1, e[0]);
    }
    EXPECT_TRUE(same(E8().positive_root(t), expect)) << to_string(t);
    EXPECT_TRUE(same(E8().root(t), expect)) << to_string(t);
    EXPECT_EQ(e8_coords(m), expect) << to_string(t);
    auto amb = oracle::e8_root(m);
    EXPECT_EQ(q_vec(E8().ambient_root(t)), std::vector<Q>(amb.begin(), amb.end())) << to_string(t);
  }
}

TEST(Roots, ParabolicRootsAgree) {
  for (int rank : {6, 7}) {
    ExceptionalGroup g(rank);
    for (const auto& t : g.reflections()) {
      EXPECT_EQ(g.root(t), g.positive_root(t)) << to_string(t);
      EXPECT_TRUE(is_nonnegative(g.root(t)));
    }
  }
}

TEST(Roots, AffineRootsArePositive) {
  AffineSymmetricGroup g(3);
  for (const auto& w : enumerate(g, 6))
    for (const auto& t : g.inversions(w)) {
      EXPECT_TRUE(is_nonnegative(g.root(t))) << to_string(t);
      EXPECT_EQ(g.root(t), g.positive_root(t)) << to_string(t);
    }
}

TEST(Roots, ChamberPointIsOnPositiveSideOfEveryWall) {
  std::array<std::int64_t, 8> x{};
  auto y = E8().chamber_point(E8().identity());
  std::copy(y.begin(), y.end(), x.begin());
  for (unsigned m : oracle::e8_subsets()) EXPECT_GT(oracle::e8_side(m, x), 0) << m;
  auto base = x_base();
  std::array<std::int64_t, 8> b{};
  for (int k = 0; k < 8; ++k) b[k] = base[k].numerator();
  for (unsigned m : oracle::e8_subsets()) EXPECT_GT(oracle::e8_side(m, b), 0) << m;
}

TEST(RootOrder, Examples) {
  EXPECT_TRUE(refl_leq(D4(), Reflection::s(2, 3), Reflection::t(1, 3)));
  EXPECT_FALSE(refl_leq(D4(), Reflection::s(1, 2), Reflection::t(1, 2)));
  EXPECT_FALSE(refl_leq(D4(), Reflection::t(1, 2), Reflection::s(1, 2)));
  EXPECT_TRUE(refl_leq(D4(), Reflection::s(1, 3), Reflection::t(2, 3)));
  EXPECT_TRUE(refl_leq(E8(), H({4, 5}), H({1})));
  EXPECT_FALSE(refl_leq(E8(), H({1, 2}), H({1, 4, 5})));
  EXPECT_FALSE(refl_leq(E8(), H({2, 3}), H({1, 2, 4})));
  EXPECT_TRUE(refl_leq(E8(), H({2, 3}), H({1, 3, 4})));
}

TEST(RootOrder, TypeBRank2) {
  SignedPermutationGroup g(Family::B, 2);
  // simple roots e_1 - e_2, -e_1; short roots -e_i, long ones e_i - e_j, -e_i - e_j
  std::vector<std::vector<Q>> basis{{Q(1), Q(-1)}, {Q(-1), Q(0)}};
  std::map<Reflection, std::vector<Q>> amb{{Reflection::s(1, 2), {Q(1), Q(-1)}},
                                           {Reflection::t(1, 2), {Q(-1), Q(-1)}},
                                           {Reflection::sign(1), {Q(-1), Q(0)}},
                                           {Reflection::sign(2), {Q(0), Q(-1)}}};
  for (const auto& [r, a] : amb)
    for (const auto& [t, b] : amb) {
      auto cr = oracle::coordinates(basis, a), ct = oracle::coordinates(basis, b);
      bool expect = r == t || (ct[0] >= cr[0] && ct[1] >= cr[1]);
      EXPECT_EQ(refl_leq(g, r, t), expect) << to_string(r) << " " << to_string(t);
    }
  EXPECT_TRUE(refl_leq(g, Reflection::sign(1), Reflection::sign(2)));
  EXPECT_TRUE(refl_leq(g, Reflection::s(1, 2), Reflection::sign(2)));
  EXPECT_TRUE(refl_leq(g, Reflection::sign(2), Reflection::t(1, 2)));
  EXPECT_FALSE(refl_leq(g, Reflection::s(1, 2), Reflection::sign(1)));
}

TEST(RootOrder, TypeDRulesMatchRoots) {
  for (int n : {4, 5, 6}) {
    SignedPermutationGroup g(Family::D, n);
    auto simple = d_simple(n);
    for (const auto& r : g.reflections())
      for (const auto& t : g.reflections()) {
        auto cr = oracle::coordinates(simple, d_ambient(n, r));
        auto ct = oracle::coordinates(simple, d_ambient(n, t));
        bool expect = true;
        for (int k = 0; k < n; ++k) expect = expect && ct[k] >= cr[k];
        EXPECT_EQ(d_rule(r, t), expect) << to_string(r) << " " << to_string(t);
        EXPECT_EQ(refl_leq(g, r, t), expect);
        EXPECT_EQ(refl_leq(g, r, t, Mode::Closed), expect);
      }
  }
}

TEST(RootOrder, E8RulesMatchRoots) {
  RootPoset<ExceptionalGroup> table(E8());
  std::map<unsigned, std::vector<Q>> coords;
  for (unsigned m : oracle::e8_subsets()) coords[m] = e8_coords(m);
  for (const auto& [mr, cr] : coords)
    for (const auto& [mt, ct] : coords) {
      bool expect = true;
      for (int k = 0; k < 8; ++k) expect = expect && ct[k] >= cr[k];
      auto r = Reflection::e_subset(static_cast<std::uint16_t>(mr));
      auto t = Reflection::e_subset(static_cast<std::uint16_t>(mt));
      EXPECT_EQ(e8_rule(r, t), expect) << to_string(r) << " " << to_string(t);
      EXPECT_EQ(refl_leq(E8(), r, t), expect);
      EXPECT_EQ(refl_leq(E8(), r, t, Mode::Closed), expect);
      EXPECT_EQ(table.leq(r, t), expect);
    }
}

TEST(RootOrder, ClosedFormsUnsupportedElsewhere) {
  SymmetricGroup a3(3);
  EXPECT_THROW(refl_leq(a3, Reflection::s(1, 2), Reflection::s(1, 3), Mode::Closed), Unsupported);
  EXPECT_THROW(d_of_reflection(a3, Reflection::s(1, 3)), Unsupported);
  EXPECT_THROW(select_s(SignedPermutationGroup(Family::B, 3), Reflection::t(1, 2)), Unsupported);
}

TEST(Conjugation, Examples) {
  EXPECT_EQ(conjugate(D4(), Reflection::s(1, 3), Reflection::t(2, 3)), Reflection::t(1, 2));
  EXPECT_EQ(conjugate(D4(), Reflection::s(1, 3), Reflection::t(2, 3), Mode::Closed), Reflection::t(1, 2));
  EXPECT_EQ(conjugate(E8(), H({1, 2, 3}), H({1})), H({1, 4, 5, 6, 7, 8}));
  EXPECT_EQ(conjugate(E8(), H({1, 2, 3}), H({1, 2, 3, 4, 5, 6})), H({4, 5, 6}));
  EXPECT_EQ(conjugate(E8(), H({1, 2, 3}), H({1, 2, 3, 4, 5, 6}), Mode::Closed), H({4, 5, 6}));
  EXPECT_EQ(conjugate(E8(), H({1}), H({1, 2, 3}), Mode::Closed), H({1, 4, 5, 6, 7, 8}));
}

TEST(Conjugation, TypeDMatchesWindows) {
  const int n = 5;
  for (const auto& r : D5().reflections())
    for (const auto& t : D5().reflections()) {
      auto expect = d_conj(n, r, t);
      EXPECT_EQ(conjugate(D5(), r, t), expect);
      EXPECT_EQ(conjugate(D5(), r, t, Mode::Closed), expect);
    }
}

TEST(Conjugation, E8MatchesRootAction) {
  for (unsigned mr : oracle::e8_subsets())
    for (unsigned mt : oracle::e8_subsets()) {
      auto r = Reflection::e_subset(static_cast<std::uint16_t>(mr));
      auto t = Reflection::e_subset(static_cast<std::uint16_t>(mt));
      auto expect = Reflection::e_subset(static_cast<std::uint16_t>(e8_conj(mr, mt)));
      EXPECT_EQ(conjugate(E8(), r, t), expect);
      EXPECT_EQ(conjugate(E8(), r, t, Mode::Closed), expect);
    }
}

TEST(DSet, Examples) {
  auto w = D4().reflection_element(Reflection::s(1, 3));
  EXPECT_EQ(d_set(D4(), w), (std::vector<Reflection>{Reflection::s(1, 2), Reflection::s(1, 3), Reflection::s(2, 3)}));
  EXPECT_TRUE(d_set(D4(), D4().identity()).empty());
  AffineSymmetricGroup a(3);
  EXPECT_EQ(d_set(a, a.from_window({2, 3, 1})).size(), 2u);
  auto u = D4().from_window({2, 1, 3, 4});
  EXPECT_TRUE(ad_set(D4(), u, u).empty());
  SignedPermutationGroup b2(Family::B, 2);
  auto bu = parse_element(b2, "s"), bv = parse_element(b2, "sts");
  EXPECT_EQ(ad_set(b2, bu, bv), (std::vector<Reflection>{Reflection::t(1, 2), Reflection::sign(2)}));
}

TEST(DSet, MatchesLengthDrop) {
  for (const auto& w : enumerate(D4())) {
    std::set<Reflection> expect;
    for (const auto& t : D4().reflections()) {
      auto wt = oracle::compose(w.window, d_window(4, t));
      if (oracle::signed_length(wt, false) < oracle::signed_length(w.window, false)) expect.insert(t);
    }
    auto got = d_set(D4(), w);
    EXPECT_EQ(std::set<Reflection>(got.begin(), got.end()), expect);
    EXPECT_EQ(static_cast<int>(got.size()), D4().length(w));
  }
}

TEST(DOfReflection, Examples) {
  EXPECT_EQ(d_of_reflection(D4(), Reflection::t(1, 2)), std::vector<Reflection>{Reflection::t(1, 2)});
  EXPECT_EQ(d_of_reflection(D4(), Reflection::s(1, 3)),
            (std::vector<Reflection>{Reflection::s(1, 2), Reflection::s(1, 3), Reflection::s(2, 3)}));
  // D(s_l) = {s_{h,l}, s_h : h < l} + {s_H : |H| = 3, 6, l in H} + {s_l}
  for (int l = 1; l <= 8; ++l) {
    std::set<Reflection> expect{H({l})};
    for (int h = 1; h < l; ++h) {
      expect.insert(H({h, l}));
      expect.insert(H({h}));
    }
    for (unsigned m : oracle::e8_subsets()) {
      int k = __builtin_popcount(m);
      if ((k == 3 || k == 6) && (m & (1u << (l - 1)))) expect.insert(Reflection::e_subset(static_cast<std::uint16_t>(m)));
    }
    for (auto mode : {Mode::Closed, Mode::Generic}) {
      auto got = d_of_reflection(E8(), H({l}), mode);
      EXPECT_EQ(std::set<Reflection>(got.begin(), got.end()), expect) << l;
    }
  }
  // D(s_{i,j}) = {s_{i,h}, s_{h,j} : i < h < j} + {s_{i,j}}
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) {
      std::set<Reflection> expect{H({i, j})};
      for (int h = i + 1; h < j; ++h) {
        expect.insert(H({i, h}));
        expect.insert(H({h, j}));
      }
      auto got = d_of_reflection(E8(), H({i, j}));
      EXPECT_EQ(std::set<Reflection>(got.begin(), got.end()), expect);
    }
}

TEST(DOfReflection, TypeDMatchesLengthDrop) {
  for (int n : {4, 5, 6}) {
    SignedPermutationGroup g(Family::D, n);
    for (const auto& t : g.reflections()) {
      std::set<Reflection> expect;
      for (const auto& r : g.reflections())
        if (d_in_dset(n, r, t)) expect.insert(r);
      auto closed = d_of_reflection(g, t, Mode::Closed);
      auto generic = d_of_reflection(g, t, Mode::Generic);
      EXPECT_EQ(std::set<Reflection>(closed.begin(), closed.end()), expect) << to_string(t);
      EXPECT_EQ(std::set<Reflection>(generic.begin(), generic.end()), expect) << to_string(t);
    }
  }
}

TEST(DOfReflection, E8MatchesLengthDrop) {
  for (unsigned mt : oracle::e8_subsets()) {
    auto t = Reflection::e_subset(static_cast<std::uint16_t>(mt));
    std::set<Reflection> expect;
    for (unsigned mr : oracle::e8_subsets())
      if (e8_in_dset(mr, mt)) expect.insert(Reflection::e_subset(static_cast<std::uint16_t>(mr)));
    auto closed = d_of_reflection(E8(), t, Mode::Closed);
    auto generic = d_of_reflection(E8(), t, Mode::Generic);
    EXPECT_EQ(std::set<Reflection>(closed.begin(), closed.end()), expect) << to_string(t);
    EXPECT_EQ(std::set<Reflection>(generic.begin(), generic.end()), expect) << to_string(t);
  }
}

TEST(DOfReflection, E6E7StayInsideParabolic) {
  for (int rank : {6, 7}) {
    ExceptionalGroup g(rank);
    for (const auto& t : g.reflections()) {
      auto closed = d_of_reflection(g, t, Mode::Closed);
      EXPECT_EQ(closed, d_of_reflection(g, t, Mode::Generic)) << to_string(t);
    }
  }
}

namespace {

template <class G>
void check_halfspace_equivalences(const G& g, const std::vector<element_t<G>>& sample) {
  for (const auto& t : g.reflections()) {
    auto dt = d_of_reflection(g, t, Mode::Generic);
    std::set<Reflection> in_dt(dt.begin(), dt.end());
    for (const auto& r : g.reflections()) {
      const bool member = in_dt.contains(r);
      EXPECT_EQ(halfspace_flip(g, t, r), member) << to_string(r) << " " << to_string(t);
      auto rt = conjugate(g, r, t);
      for (const auto& v : sample) {
        bool twisted = g.is_inversion(v, r) == !g.is_inversion(g.right_multiply(v, t), rt);
        EXPECT_EQ(twisted, member) << to_string(r) << " " << to_string(t);
      }
    }
  }
}

}  // namespace

TEST(HalfspaceFlip, EquivalentFormsD4) {
  check_halfspace_equivalences(D4(), enumerate(D4()));
}

TEST(HalfspaceFlip, EquivalentFormsE8Sampled) {
  Rng rng(kDefaultSeed);
  std::vector<EElement> sample;
  for (int k = 0; k < 12; ++k) sample.push_back(random_element(E8(), 120, rng));
  check_halfspace_equivalences(E8(), sample);
}

namespace {

template <class G>
void check_structure(const G& g) {
  for (const auto& t : g.reflections()) {
    auto dt = d_of_reflection(g, t, Mode::Generic);
    std::set<Reflection> in_dt(dt.begin(), dt.end());
    auto tw = g.reflection_element(t);
    for (const auto& r : g.reflections()) {
      // {t}, D(t)\{t}, A(t) are each stable under r -> r^t
      auto rt = conjugate(g, r, t);
      EXPECT_EQ(in_dt.contains(rt), in_dt.contains(r));
      EXPECT_EQ(rt == t, r == t);
      // a reflection commuting with t, other than t, is not in D(t)
      auto rw = g.reflection_element(r);
      if (r != t && g.multiply(rw, tw) == g.multiply(tw, rw)) {
        EXPECT_FALSE(in_dt.contains(r));
      }
      if (in_dt.contains(r)) {
        EXPECT_TRUE(refl_leq(g, r, t)) << to_string(r) << " " << to_string(t);
      }
    }
  }
}

}  // namespace

TEST(ReflectionStructure, TypeD) {
  check_structure(D4());
  check_structure(D5());
}

TEST(ReflectionStructure, E8) { check_structure(E8()); }

TEST(ReflectionStructure, ADCountingIdentity) {
  auto check = [](const auto& g, const auto& elems) {
    for (const auto& u : elems)
      for (const auto& v : elems) {
        if (g.length(u) >= g.length(v)) continue;
        auto du = d_set(g, u), dv = d_set(g, v);
        std::vector<Reflection> only_u;
        std::set_difference(du.begin(), du.end(), dv.begin(), dv.end(), std::back_inserter(only_u));
        EXPECT_EQ(static_cast<int>(ad_set(g, u, v).size()),
                  g.length(v) - g.length(u) + static_cast<int>(only_u.size()));
      }
  };
  check(D4(), enumerate(D4()));
  SymmetricGroup a3(3);
  check(a3, enumerate(a3));
  Rng rng(kDefaultSeed);
  std::vector<EElement> sample;
  for (int k = 0; k < 60; ++k) sample.push_back(random_element(E8(), 120, rng));
  check(E8(), sample);
}

TEST(SelectS, Examples) {
  EXPECT_EQ(select_s(D4(), Reflection::s(1, 3)), Reflection::s(2, 3));
  EXPECT_EQ(conjugate(D4(), Reflection::s(2, 3), Reflection::s(1, 3)), Reflection::s(1, 2));
  EXPECT_EQ(select_s(D4(), Reflection::t(2, 3)), Reflection::s(1, 2));
  EXPECT_EQ(select_s(D4(), Reflection::t(1, 3)), Reflection::s(2, 3));
  EXPECT_EQ(select_s(E8(), H({1})), H({1, 2, 3}));
  EXPECT_EQ(select_s(E8(), H({4})), H({3, 4}));
  EXPECT_EQ(select_s(E8(), H({1, 2, 3, 4, 5, 6})), H({1, 2, 3}));
  EXPECT_EQ(select_s(E8(), H({1, 2, 4})), H({3, 4}));
  EXPECT_EQ(select_s(E8(), H({2, 5})), H({4, 5}));
  EXPECT_THROW(select_s(D4(), Reflection::t(1, 2)), PreconditionError);
  EXPECT_THROW(select_s(E8(), H({1, 2, 3})), PreconditionError);
}

namespace {

template <class G>
void check_select_s_contract(const G& g) {
  for (const auto& t : g.reflections()) {
    auto tw = g.reflection_element(t);
    if (g.length(tw) == 1) continue;
    auto s = select_s(g, t);
    auto sw = g.reflection_element(s);
    EXPECT_EQ(g.length(sw), 1) << to_string(t);
    EXPECT_TRUE(g.is_inversion(tw, s)) << to_string(t);
    // s^t = t^s
    EXPECT_EQ(conjugate(g, s, t), conjugate(g, t, s)) << to_string(t);
    EXPECT_NE(conjugate(g, s, t), t);
  }
}

}  // namespace

TEST(SelectS, ContractD5E8) {
  check_select_s_contract(D5());
  check_select_s_contract(SignedPermutationGroup(Family::D, 6));
  check_select_s_contract(E8());
  check_select_s_contract(ExceptionalGroup(7));
}

TEST(SelectS, InductiveStepOnSampledPairs) {
  // for t minimal in AD(u,v) and not simple: s^t is minimal in AD(us,vs)
  // and s is a right descent of u exactly when it is one of v
  auto check = [](const auto& g, int count) {
    RootPoset table(g);
    Rng rng(kDefaultSeed);
    int seen = 0;
    for (int k = 0; k < count; ++k) {
      auto [u, v] = random_ad_pair(g, static_cast<int>(g.reflections().size()), rng);
      for (const auto& t : minimal_ad(g, u, v, &table)) {
        if (g.length(g.reflection_element(t)) == 1) continue;
        ++seen;
        auto s = select_s(g, t);
        auto sw = g.reflection_element(s);
        auto st = conjugate(g, s, t);
        auto us = g.multiply(u, sw), vs = g.multiply(v, sw);
        auto m = minimal_ad(g, us, vs, &table);
        EXPECT_NE(std::find(m.begin(), m.end(), st), m.end()) << to_string(t);
        EXPECT_EQ(g.is_inversion(u, s), g.is_inversion(v, s)) << to_string(t);
      }
    }
    EXPECT_GT(seen, 0);
  };
  check(D5(), 1000);
  check(E8(), 1000);
}
