#include <gtest/gtest.h>

#include <set>

#include "coxlift/coxlift.hpp"
#include "oracles.hpp"

using namespace coxlift;

namespace {

template <class G>
void check_against_subwords(const G& g, const std::vector<element_t<G>>& elems) {
  for (const auto& u : elems)
    for (const auto& v : elems) EXPECT_EQ(leq(g, u, v), oracle::subword_leq(g, u, v));
}

}  // namespace

TEST(Bruhat, MatchesSubwordCriterion) {
  SymmetricGroup a3(3);
  check_against_subwords(a3, enumerate(a3));
  SignedPermutationGroup b3(Family::B, 3);
  check_against_subwords(b3, enumerate(b3));
  SignedPermutationGroup d4(Family::D, 4);
  check_against_subwords(d4, enumerate(d4, 5));
  AffineSymmetricGroup aff(3);
  check_against_subwords(aff, enumerate(aff, 5));
}

TEST(Bruhat, E8SampledAgainstSubwords) {
  ExceptionalGroup g(8);
  Rng rng(kDefaultSeed);
  for (int k = 0; k < 200; ++k) {
    auto v = random_element(g, 14, rng);
    auto u = random_element(g, 10, rng);
    EXPECT_EQ(leq(g, u, v), oracle::subword_leq(g, u, v));
  }
}

TEST(Bruhat, RankTwoInterval) {
  SignedPermutationGroup b2(Family::B, 2);
  auto s = parse_element(b2, "s"), sts = parse_element(b2, "sts");
  std::set<SignedPermutation> expect;
  for (const char* w : {"s", "st", "ts", "sts"}) expect.insert(parse_element(b2, w));
  auto got = interval(b2, s, sts);
  EXPECT_EQ(std::set<SignedPermutation>(got.begin(), got.end()), expect);
  EXPECT_EQ(got.front(), s);
  EXPECT_EQ(got.back(), sts);
  EXPECT_EQ(interval(b2, b2.identity(), parse_element(b2, "stst")).size(), 8u);
  EXPECT_TRUE(covers(b2, s, parse_element(b2, "st")));
  EXPECT_FALSE(covers(b2, s, sts));
  EXPECT_TRUE(covers(b2, parse_element(b2, "t"), parse_element(b2, "st")));
  EXPECT_FALSE(leq(b2, parse_element(b2, "st"), parse_element(b2, "ts")));
}

TEST(Bruhat, IntervalMatchesBruteForce) {
  AffineSymmetricGroup g(3);
  auto elems = enumerate(g, 6);
  auto v = g.from_window({3, 5, -2});
  for (const auto& u : elems) {
    if (!oracle::subword_leq(g, u, v)) continue;
    std::set<AffinePermutation> expect;
    for (const auto& z : elems)
      if (oracle::subword_leq(g, u, z) && oracle::subword_leq(g, z, v)) expect.insert(z);
    auto got = interval(g, u, v);
    EXPECT_EQ(std::set<AffinePermutation>(got.begin(), got.end()), expect);
  }
}

TEST(Bruhat, IntervalErrors) {
  SymmetricGroup a2(2);
  auto s1 = generator(a2, 0), s2 = generator(a2, 1);
  EXPECT_THROW(interval(a2, s1, s2), PreconditionError);
  EXPECT_THROW(interval(a2, from_word(a2, {0, 1}), s1), PreconditionError);
  EXPECT_EQ(interval(a2, s1, s1), std::vector<Permutation>{s1});
}

TEST(Bruhat, InversionIsAnAutomorphism) {
  SignedPermutationGroup d4(Family::D, 4);
  auto elems = enumerate(d4);
  for (const auto& u : elems)
    for (const auto& v : elems) EXPECT_EQ(leq(d4, u, v), leq(d4, d4.inverse(u), d4.inverse(v)));
}

TEST(Bruhat, GradedChains) {
  SignedPermutationGroup d4(Family::D, 4);
  auto elems = enumerate(d4);
  for (const auto& u : elems)
    for (const auto& v : elems) {
      if (!less(d4, u, v)) continue;
      bool found = false;
      for (const auto& t : d4.reflections()) {
        auto z = d4.right_multiply(u, t);
        if (covers(d4, u, z) && leq(d4, z, v)) {
          found = true;
          break;
        }
      }
      EXPECT_TRUE(found);
    }
}

TEST(Bruhat, DescentChoiceIrrelevant) {
  Rng rng(kDefaultSeed);
  SignedPermutationGroup d5(Family::D, 5);
  ExceptionalGroup e8(8);
  for (int k = 0; k < 1000; ++k) {
    auto u = random_element(d5, 20, rng), v = random_element(d5, 20, rng);
    EXPECT_EQ(leq(d5, u, v), leq_random_descent(d5, u, v, rng));
    auto x = random_element(e8, 120, rng), y = random_element(e8, 120, rng);
    EXPECT_EQ(leq(e8, x, y), leq_random_descent(e8, x, y, rng));
  }
}

TEST(Lifting, Examples) {
  SymmetricGroup a3(3);
  auto u = from_word(a3, {0}), v = from_word(a3, {1, 0, 2, 1});
  EXPECT_TRUE(lifting_check(a3, u, v, 1));
  EXPECT_THROW(lifting_check(a3, u, v, 0), PreconditionError);
  EXPECT_THROW(lifting_check(a3, v, u, 1), PreconditionError);
  EXPECT_THROW(lifting_check(a3, u, u, 1), PreconditionError);
}

TEST(Lifting, HoldsExhaustively) {
  SignedPermutationGroup b3(Family::B, 3);
  auto elems = enumerate(b3);
  int checked = 0;
  for (const auto& u : elems)
    for (const auto& v : elems) {
      if (!less(b3, u, v)) continue;
      for (int s = 0; s < b3.rank(); ++s)
        if (b3.is_right_descent(v, s) && !b3.is_right_descent(u, s)) {
          EXPECT_TRUE(lifting_check(b3, u, v, s));
          ++checked;
        }
    }
  EXPECT_GT(checked, 0);
}
