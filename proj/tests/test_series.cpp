#include "fanohost/series.hpp"

#include <gtest/gtest.h>

using namespace fanohost;
using QS = TruncatedSeries<Rational>;

TEST(TruncatedSeries, ProductTruncates) {
  auto a = QS::constant(3, 1) + QS::monomial(3, 1, 1);  // 1 + h
  auto cube = pow(a, 5);
  EXPECT_EQ(cube[0], 1);
  EXPECT_EQ(cube[3], 10);  // C(5,3)
  EXPECT_EQ(cube.order(), 3U);
}

TEST(TruncatedSeries, InverseOfGeometric) {
  auto a = QS::constant(4, 1) - QS::monomial(4, 2, 1);  // 1 - 2h
  auto inv = a.inverse();
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(inv[k], Rational(1 << k));
  EXPECT_EQ(a * inv, QS::constant(4, 1));
}

TEST(TruncatedSeries, ExpRescaleMatchesExpOfScaledArgument) {
  auto e = QS::exp_scaled(5, 1);
  EXPECT_EQ(e.rescale(3), QS::exp_scaled(5, 3));
  EXPECT_EQ(QS::exp_scaled(5, 2) * QS::exp_scaled(5, -2), QS::constant(5, 1));
}

TEST(TruncatedSeries, Errors) {
  EXPECT_THROW(QS::monomial(3, 1, 1).inverse(), std::domain_error);
  EXPECT_THROW(QS(2) + QS(3), std::logic_error);
}
