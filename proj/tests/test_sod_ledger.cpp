#include "fanohost/sod_ledger.hpp"

#include <gtest/gtest.h>

using namespace fanohost;

TEST(Sod, QuinticHost) {
  auto sod = sod_of_host(build_general_host(make_ci(4, {5})));
  ASSERT_EQ(sod.blocks.size(), 2U);
  EXPECT_EQ(std::get<ExceptionalBlock>(sod.blocks[0]).count, 6);
  EXPECT_EQ(std::get<VisitorBlock>(sod.blocks[1]).ci, make_ci(4, {5}));
}

TEST(Sod, PlaneQuarticHost) {
  auto sod = sod_of_host(build_general_host(make_ci(2, {4})));
  ASSERT_EQ(sod.blocks.size(), 3U);
  EXPECT_EQ(std::get<ExceptionalBlock>(sod.blocks[0]).count, 5);
  EXPECT_EQ(std::get<ExceptionalBlock>(sod.blocks[1]).count, 5);
  EXPECT_TRUE(std::holds_alternative<VisitorBlock>(sod.blocks[2]));
  EXPECT_EQ(sod.exceptional_count(), 10);
}

TEST(Sod, OuchiHost) {
  auto h = std::get<HostConstruction>(build_ouchi_host(make_ci(8, {3, 3, 3})));
  auto sod = sod_of_host(h);
  ASSERT_EQ(sod.blocks.size(), 2U);
  EXPECT_EQ(std::get<OpaqueBlock>(sod.blocks[0]).base, make_ci(8, {3}));
  EXPECT_EQ(sod.visitor_blocks(), 1);
  EXPECT_EQ(sod.exceptional_count(), 0);
}

TEST(Sod, ExceptionalCountOfGeneralHosts) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 6; ++d) {
      auto ci = make_ci(n, {d});
      int previous = -1;
      for (int r = 1; r <= minimal_r(ci) + 3; ++r) {
        auto sod = sod_of_host(build_general_host(ci, r));
        const int count = sod.exceptional_count();
        EXPECT_EQ(count, (r + 1 - 1) * (n + r + 1));
        EXPECT_GT(count, previous);
        EXPECT_EQ(sod.visitor_blocks(), 1);
        EXPECT_TRUE(std::holds_alternative<VisitorBlock>(sod.blocks.back()));
        previous = count;
      }
    }
}

TEST(Sod, RankTwoHostsLookLikeBlowups) {
  // one base block, one copy of D^b(Y)
  for (const auto& ci : {make_ci(4, {5}), make_ci(3, {4}), make_ci(3, {2, 2}), make_ci(5, {3, 3})}) {
    auto h = ci.codim() == 1 ? build_general_host(ci, 1) : build_cy_host(ci);
    ASSERT_TRUE(h.blowup);
    auto sod = sod_of_host(h);
    EXPECT_EQ(sod.blocks.size(), 2U);
  }
}

TEST(HochschildPrediction, QuarticK3Host) {
  auto hh = hh_prediction(build_cy_host(make_ci(3, {4})));
  EXPECT_EQ(hh.at(0), 27);
  EXPECT_EQ(hh.at(2), 1);
  EXPECT_EQ(hh.at(-2), 1);
  EXPECT_EQ(hh.at(1), 0);
}

TEST(HochschildPrediction, EllipticCurveHost) {
  auto hh = hh_prediction(build_cy_host(make_ci(2, {3})));
  EXPECT_EQ(hh.at(0), 6);
  EXPECT_EQ(hh.at(1), 1);
  EXPECT_EQ(hh.at(-1), 1);
}

TEST(HochschildPrediction, QuinticHost) {
  auto hh = hh_prediction(build_general_host(make_ci(4, {5})));
  const std::vector<Integer> expected{1, 0, 101, 10, 101, 0, 1};
  EXPECT_EQ(hh.values, expected);
  EXPECT_EQ(hh.alternating_sum(), -194);
}

TEST(HochschildPrediction, OuchiUsesBaseHodgeNumbers) {
  auto h = std::get<HostConstruction>(build_ouchi_host(make_ci(8, {3, 3, 3})));
  auto hh = hh_prediction(h);
  const auto s = hodge_numbers(make_ci(8, {3}));
  const auto y = hodge_numbers(make_ci(8, {3, 3, 3}));
  EXPECT_EQ(hh.span, 7);
  EXPECT_EQ(hh.at(0), s.diagonal_sum(0) + y.diagonal_sum(0));
  EXPECT_EQ(hh.alternating_sum(), euler_char_ci(make_ci(8, {3})) + euler_char_ci(make_ci(8, {3, 3, 3})));
}

TEST(EulerConsistency, NamedHosts) {
  auto q = euler_consistency(build_general_host(make_ci(4, {5})));
  EXPECT_EQ(*q.lhs, -194);
  EXPECT_EQ(*q.rhs, -194);
  EXPECT_TRUE(*q.pass);
  auto k3 = euler_consistency(build_cy_host(make_ci(3, {4})));
  EXPECT_EQ(*k3.lhs, 29);
  EXPECT_TRUE(*k3.pass);
  auto conic = euler_consistency(build_general_host(make_ci(2, {2})));
  EXPECT_EQ(*conic.lhs, 6);
  EXPECT_EQ(*conic.rhs, 6);
}

TEST(EulerConsistency, OuchiIsSkipped) {
  auto e = euler_consistency(std::get<HostConstruction>(build_ouchi_host(make_ci(8, {3, 3, 3}))));
  EXPECT_FALSE(e.pass.has_value());
  EXPECT_FALSE(e.lhs.has_value());
  EXPECT_NE(e.status.find("skipped"), std::string::npos);
}

TEST(EulerConsistency, HochschildSumMatchesRhs) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 5; ++d)
      for (int r = 1; r <= 3; ++r) {
        auto h = build_general_host(make_ci(n, {d}), r);
        auto e = euler_consistency(h);
        ASSERT_TRUE(*e.pass) << h.visitor.label() << " r=" << r;
        ASSERT_EQ(hh_prediction(h).alternating_sum(), *e.rhs);
      }
}
