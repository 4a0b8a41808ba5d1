#include "fanohost/cayley_builder.hpp"

#include <gtest/gtest.h>

using namespace fanohost;

TEST(MinimalR, Examples) {
  EXPECT_EQ(minimal_r(make_ci(4, {5})), 1);
  EXPECT_EQ(minimal_r(make_ci(2, {4})), 2);
  EXPECT_EQ(minimal_r(make_ci(3, {2, 2})), 1);
  EXPECT_EQ(minimal_r(make_ci(2, {9})), 7);
}

TEST(MinimalR, IsTheLeastAdmissibleValue) {
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= 9; ++d) {
      auto ci = make_ci(n, {d});
      const int r = minimal_r(ci);
      EXPECT_TRUE(inequality_certificate(ci, r));
      if (r > 1) {
        EXPECT_FALSE(inequality_certificate(ci, r - 1));
      }
    }
}

TEST(GeneralHost, Quintic) {
  auto h = build_general_host(make_ci(4, {5}), 1);
  EXPECT_EQ(h.kind, HostKind::GeneralCayley);
  EXPECT_EQ(h.base, BaseSpace::projective(5));
  EXPECT_EQ(h.twists, (std::vector<std::int64_t>{1, 5}));
  EXPECT_EQ(h.dim_x, 5);
  EXPECT_EQ(h.anti_canonical, (DivisorClass{1, 0}));
  EXPECT_TRUE(h.fano);
  EXPECT_EQ(h.curve_degrees, (std::vector<std::int64_t>{1, 1, 5}));
  EXPECT_TRUE(h.blowup);
}

TEST(GeneralHost, PlaneQuartic) {
  auto h = build_general_host(make_ci(2, {4}));
  EXPECT_EQ(h.r, 2);
  EXPECT_EQ(h.base.dim, 4);
  EXPECT_EQ(h.twists, (std::vector<std::int64_t>{1, 1, 4}));
  EXPECT_EQ(h.dim_x, 5);
  EXPECT_EQ(h.anti_canonical, (DivisorClass{2, -1}));
  EXPECT_EQ(h.anti_canonical_f, (DivisorClass{2, 1}));
  EXPECT_EQ(h.curve_degrees, (std::vector<std::int64_t>{2, 1, 1, 7}));
  EXPECT_TRUE(h.fano);
  EXPECT_FALSE(h.lemma31);  // sufficient criterion only
  EXPECT_FALSE(h.blowup);
}

TEST(GeneralHost, BelowThresholdIsNotFano) {
  auto ci = make_ci(2, {4});
  auto h = build_general_host(ci, 1);
  EXPECT_FALSE(h.fano);
  EXPECT_FALSE(inequality_certificate(ci, 1));
  // a section curve has degree n + r + c - d = 0
  EXPECT_EQ(*std::min_element(h.curve_degrees.begin(), h.curve_degrees.end()), 0);
}

TEST(GeneralHost, RejectsNonPositiveR) {
  EXPECT_THROW(build_general_host(make_ci(2, {4}), 0), InvalidInput);
  EXPECT_THROW(build_general_host(make_ci(2, {4}), -3), InvalidInput);
}

TEST(GeneralHost, CertificatesAgreeOverSmallSweep) {
  for (int n = 1; n <= 6; ++n)
    for (int d1 = 1; d1 <= 6; ++d1)
      for (int d2 = 1; d2 <= d1; ++d2) {
        if (n < 2) continue;
        auto ci = make_ci(n, {d1, d2});
        for (int r = 1; r <= minimal_r(ci) + 3; ++r) {
          auto h = build_general_host(ci, r);
          ASSERT_EQ(inequality_certificate(ci, r), h.fano) << ci.label() << " r=" << r;
          ASSERT_EQ(h.anti_canonical, adjunction_anti_canonical(*h.bundle));
          ASSERT_EQ(h.dim_x, n + 2 * r + 2 - 2);
        }
      }
}

TEST(CyHost, QuarticK3) {
  auto h = build_cy_host(make_ci(3, {4}));
  EXPECT_EQ(h.kind, HostKind::CYBlowup);
  EXPECT_EQ(h.base.dim, 4);
  EXPECT_EQ(h.twists, (std::vector<std::int64_t>{1, 4}));
  EXPECT_EQ(h.dim_x, 4);
  EXPECT_TRUE(h.fano && h.lemma31 && h.blowup);
}

TEST(CyHost, EllipticCurveAndCodimThree) {
  EXPECT_EQ(build_cy_host(make_ci(2, {3})).dim_x, 3);
  auto h = build_cy_host(make_ci(7, {4, 2, 2}));
  EXPECT_EQ(h.kind, HostKind::CYDirect);
  EXPECT_EQ(h.base.dim, 7);
  EXPECT_EQ(h.twists, (std::vector<std::int64_t>{4, 2, 2}));
  EXPECT_EQ(h.dim_x, 8);
  EXPECT_FALSE(h.blowup);
  auto e = build_cy_host(make_ci(3, {2, 2}));
  EXPECT_TRUE(e.blowup);
  EXPECT_EQ(e.dim_x, 3);
}

TEST(CyHost, RejectsNonCalabiYau) { EXPECT_THROW(build_cy_host(make_ci(2, {4})), InvalidInput); }

TEST(CyHost, HypersurfaceCoincidesWithGeneralHost) {
  for (int n = 2; n <= 8; ++n) {
    auto ci = make_ci(n, {n + 1});
    ASSERT_EQ(minimal_r(ci), 1);
    EXPECT_EQ(build_cy_host(ci).bundle, build_general_host(ci).bundle);
  }
}

TEST(OuchiHost, Examples) {
  auto o = build_ouchi_host(make_ci(8, {3, 3, 3}));
  ASSERT_TRUE(std::holds_alternative<HostConstruction>(o));
  const auto& h = std::get<HostConstruction>(o);
  EXPECT_EQ(h.base.ci, make_ci(8, {3}));
  EXPECT_EQ(h.base.dim, 7);
  EXPECT_EQ(h.dim_x, 7);
  EXPECT_TRUE(h.fano && h.lemma31 && h.blowup);
  EXPECT_FALSE(h.bundle.has_value());
  EXPECT_EQ(h.anti_canonical, (DivisorClass{1, 0}));

  auto o2 = build_ouchi_host(make_ci(7, {2, 2, 2, 2}));
  ASSERT_TRUE(std::holds_alternative<HostConstruction>(o2));
  EXPECT_EQ(std::get<HostConstruction>(o2).base.ci, make_ci(7, {2, 2}));
  EXPECT_EQ(std::get<HostConstruction>(o2).dim_x, 5);

  EXPECT_TRUE(std::holds_alternative<Unsupported>(build_ouchi_host(make_ci(4, {5}))));
  EXPECT_TRUE(std::holds_alternative<HostConstruction>(build_ouchi_host(make_ci(6, {3, 2, 2}))));
  EXPECT_TRUE(std::holds_alternative<Unsupported>(build_ouchi_host(make_ci(6, {2, 2, 2}))));  // not CY
}

TEST(OuchiHost, BaseTakesTheSmallestDegrees) {
  auto h = std::get<HostConstruction>(build_ouchi_host(make_ci(7, {2, 4, 2})));
  EXPECT_EQ(h.twists, (std::vector<std::int64_t>{4, 2}));
  EXPECT_EQ(h.base.ci, make_ci(7, {2}));
  EXPECT_EQ(h.dim_x, 6);
}

TEST(Lemma31, Examples) {
  EXPECT_TRUE(lemma31_check(-6, {1, 5}));
  EXPECT_FALSE(lemma31_check(-5, {1, 1, 4}));
  EXPECT_FALSE(lemma31_check(-5, {0, 2, 2}));
  EXPECT_TRUE(lemma31_check(BaseSpace::projective(5), {1, 5}));
  EXPECT_TRUE(lemma31_check(BaseSpace::complete_intersection(make_ci(8, {3})), {3, 3}));
}

TEST(FanoDimension, Examples) {
  auto q = fano_dimension_upper_bound(make_ci(4, {5}));
  EXPECT_EQ(q.bound, 5);
  ASSERT_EQ(q.best.size(), 2U);
  EXPECT_EQ(q.candidates[q.best[0]].kind, HostKind::GeneralCayley);
  EXPECT_EQ(q.candidates[q.best[1]].kind, HostKind::CYBlowup);

  auto o = fano_dimension_upper_bound(make_ci(8, {3, 3, 3}));
  EXPECT_EQ(o.bound, 7);
  EXPECT_EQ(o.candidates[o.best.front()].kind, HostKind::Ouchi);

  EXPECT_EQ(fano_dimension_upper_bound(make_ci(2, {4})).bound, 5);
  EXPECT_EQ(fano_dimension_upper_bound(make_ci(7, {4, 2, 2})).bound, 6);

  auto e = fano_dimension_upper_bound(make_ci(2, {3}));
  EXPECT_EQ(e.bound, 3);
  EXPECT_EQ(e.notes.size(), 2U);
}
