#include "fanohost/complete_intersection.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace fanohost;

namespace {

std::vector<CompleteIntersection> small_sweep(int nmax, int cmax, int dmax) {
  std::vector<CompleteIntersection> out;
  for (int n = 1; n <= nmax; ++n)
    for (int c = 1; c <= std::min(n, cmax); ++c) {
      std::vector<int> d(static_cast<std::size_t>(c), 1);
      while (true) {
        if (std::is_sorted(d.begin(), d.end(), std::greater<>())) out.push_back(make_ci(n, d));
        int i = 0;
        while (i < c && ++d[static_cast<std::size_t>(i)] > dmax) d[static_cast<std::size_t>(i++)] = 1;
        if (i == c) break;
      }
    }
  return out;
}

}  // namespace

TEST(MakeCi, NormalizesAndReportsDimension) {
  auto quintic = make_ci(4, {5});
  EXPECT_EQ(quintic.dimension(), 3);
  auto cubic = make_ci(2, {3});
  EXPECT_EQ(cubic.dimension(), 1);
  auto ci = make_ci(3, {2, 2});
  EXPECT_EQ(ci.degrees(), (std::vector<int>{2, 2}));
  EXPECT_EQ(ci.dimension(), 1);
  EXPECT_EQ(make_ci(5, {2, 4, 3}).degrees(), (std::vector<int>{4, 3, 2}));
}

TEST(MakeCi, RejectsBadInput) {
  EXPECT_THROW(make_ci(2, {2, 2, 2}), InvalidInput);
  EXPECT_THROW(make_ci(3, {0}), InvalidInput);
  EXPECT_THROW(make_ci(3, {2, -1}), InvalidInput);
  EXPECT_THROW(make_ci(0, {1}), InvalidInput);
  EXPECT_THROW(make_ci(3, {}), InvalidInput);
}

TEST(CanonicalTwist, Examples) {
  EXPECT_EQ(canonical_twist(make_ci(4, {5})), 0);
  EXPECT_TRUE(make_ci(4, {5}).is_calabi_yau());
  EXPECT_EQ(canonical_twist(make_ci(2, {4})), 1);
  EXPECT_EQ(canonical_twist(make_ci(2, {2})), -1);
}

TEST(EulerChar, Examples) {
  EXPECT_EQ(euler_char_ci(make_ci(2, {3})), 0);
  EXPECT_EQ(euler_char_ci(make_ci(3, {4})), 24);
  EXPECT_EQ(euler_char_ci(make_ci(4, {5})), -200);
}

TEST(EulerChar, MatchesEnumerationOracle) {
  for (const auto& ci : small_sweep(7, 4, 6))
    ASSERT_EQ(euler_char_ci(ci), oracle::euler_char_enumerated(ci.ambient_dim(), ci.degrees())) << ci.label();
}

TEST(EulerChar, ZeroDimensionalIsBezout) {
  for (const auto& ci : small_sweep(4, 4, 5))
    if (ci.dimension() == 0) {
      EXPECT_EQ(euler_char_ci(ci), ci.degree()) << ci.label();
    }
}

TEST(EulerChar, PermutationInvariant) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> deg(1, 7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> d{deg(rng), deg(rng), deg(rng)};
    auto base = euler_char_ci(make_ci(7, d));
    std::shuffle(d.begin(), d.end(), rng);
    EXPECT_EQ(euler_char_ci(make_ci(7, d)), base);
  }
}

TEST(HodgeNumbers, EllipticCurve) {
  auto t = hodge_numbers(make_ci(2, {3}));
  EXPECT_EQ(t.at(0, 0), 1);
  EXPECT_EQ(t.at(1, 0), 1);
  EXPECT_EQ(t.at(0, 1), 1);
  EXPECT_EQ(t.at(1, 1), 1);
}

TEST(HodgeNumbers, QuarticK3AndQuintic) {
  auto k3 = hodge_numbers(make_ci(3, {4}));
  EXPECT_EQ(k3.at(2, 0), 1);
  EXPECT_EQ(k3.at(1, 1), 20);
  EXPECT_EQ(k3.euler_characteristic(), 24);
  auto quintic = hodge_numbers(make_ci(4, {5}));
  EXPECT_EQ(quintic.at(2, 1), 101);
  EXPECT_EQ(quintic.at(1, 1), 1);
  EXPECT_EQ(quintic.euler_characteristic(), -200);
}

TEST(HodgeNumbers, ZeroDimensionalTable) {
  auto t = hodge_numbers(make_ci(2, {3, 2}));
  EXPECT_EQ(t.dim(), 0);
  EXPECT_EQ(t.at(0, 0), 6);
}

TEST(HodgeNumbers, LinearSpacesAndQuadrics) {
  // CI(4;1) is P^3, CI(3;2) a quadric surface
  auto p3 = hodge_numbers(make_ci(4, {1}));
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) EXPECT_EQ(p3.at(p, q), p == q ? 1 : 0);
  EXPECT_EQ(hodge_numbers(make_ci(3, {2})).at(1, 1), 2);
  EXPECT_EQ(hodge_numbers(make_ci(5, {2})).at(2, 2), 2);
}

TEST(HodgeNumbers, ChiPMatchesHirzebruchGenusOracle) {
  for (const auto& ci : small_sweep(6, 3, 5)) {
    const auto expected = oracle::chi_p_by_interpolation(ci.ambient_dim(), ci.degrees());
    const auto got = holomorphic_euler_characteristics(ci);
    ASSERT_EQ(got.size(), expected.size()) << ci.label();
    for (std::size_t p = 0; p < got.size(); ++p) ASSERT_EQ(Rational(got[p]), expected[p]) << ci.label() << " p=" << p;
  }
}

TEST(HodgeNumbers, AlternatingSumIsEulerCharacteristic) {
  for (const auto& ci : small_sweep(7, 4, 6)) {
    const auto t = hodge_numbers(ci);
    ASSERT_TRUE(t.satisfies_invariants()) << ci.label();
    ASSERT_EQ(t.euler_characteristic(), euler_char_ci(ci)) << ci.label();
  }
}

TEST(HodgeTable, DiagonalSums) {
  auto q = hodge_numbers(make_ci(4, {5}));
  EXPECT_EQ(q.diagonal_sum(0), 4);
  EXPECT_EQ(q.diagonal_sum(1), 101);
  EXPECT_EQ(q.diagonal_sum(-1), 101);
  EXPECT_EQ(q.diagonal_sum(3), 1);
  EXPECT_EQ(q.diagonal_sum(2), 0);
}
