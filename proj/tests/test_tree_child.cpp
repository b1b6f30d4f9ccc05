#include <gtest/gtest.h>

#include <cmath>

#include "walls/tree_child.hpp"
#include "walls/wall_tables.hpp"

using namespace walls;

TEST(TreeChildTest, SmallValues) {
  EXPECT_EQ(tc(1, 0), 1);
  EXPECT_EQ(tc(2, 1), 2);
  EXPECT_EQ(tc(3, 1), 21);
  EXPECT_EQ(tc(3, 2), 42);
  EXPECT_EQ(tc(4, 2), 1272);
  EXPECT_EQ(tc(5, 3), 154500);
  EXPECT_EQ(tc(3, 3), 0);
  EXPECT_EQ(tc(3, -1), 0);
  EXPECT_THROW(tc(0, 0), DomainError);
}

TEST(TreeChildTest, MaximalReticulationColumn) {
  const std::vector<Nat> expect = {1, 2, 42, 2544, 309000, 63068400, Nat("19474761600")};
  for (long n = 1; n <= 7; ++n) EXPECT_EQ(tc(n, n - 1), expect[n - 1]) << n;
}

TEST(TreeChildTest, TreesArePhylogenies) {
  for (long n = 1; n <= 30; ++n) EXPECT_EQ(tc(n, 0), double_factorial(2 * n - 3)) << n;
}

TEST(TreeChildTest, AllExactRoutesAgree) {
  for (long n = 1; n <= 15; ++n) {
    for (long k = 0; k < n; ++k) {
      const Nat v = tc(n, k);
      EXPECT_EQ(tc_via_b(n, k), v) << n << "," << k;
      EXPECT_EQ(tc_rec(n, k), v) << n << "," << k;
      EXPECT_EQ(tc_sum(n, k), v) << n << "," << k;
      EXPECT_EQ(tc_closed(n, k), v) << n << "," << k;
    }
  }
}

TEST(TreeChildTest, ChainRecurrenceAgrees) {
  for (long k = 0; k <= 14; ++k) {
    for (long m = 0; k + m + 1 <= 15; ++m) EXPECT_EQ(tc_chain(k, m), tc(k + m + 1, k)) << k << "," << m;
  }
}

TEST(TreeChildTest, OutOfRangeIsZeroForEveryRoute) {
  EXPECT_EQ(tc_via_b(4, 4), 0);
  EXPECT_EQ(tc_rec(4, 5), 0);
  EXPECT_EQ(tc_sum(4, -1), 0);
  EXPECT_EQ(tc_closed(4, 4), 0);
}

TEST(TreeChildAsymptotics, RelativeErrorShrinks) {
  for (long k = 0; k <= 3; ++k) {
    double prev = std::abs(asym_relative_error(25, k));
    for (long n : {50L, 100L, 200L}) {
      const double err = std::abs(asym_relative_error(n, k));
      EXPECT_LT(err, prev) << n << "," << k;
      prev = err;
    }
  }
}

TEST(TreeChildAsymptotics, DoublingShrinksErrorFourfold) {
  const double e1 = std::abs(asym_relative_error(100, 2));
  const double e2 = std::abs(asym_relative_error(200, 2));
  EXPECT_GE(e1 / e2, 4.0);
}

TEST(TreeChildAsymptotics, TreesWithinOnePercent) { EXPECT_LT(std::abs(asym_relative_error(100, 0)), 0.01); }

TEST(TreeChildAsymptotics, LogAndLinearFormsAgree) {
  EXPECT_NEAR(std::log(tc_asym(30, 2)), tc_asym_log(30, 2), 1e-9);
  EXPECT_NEAR(tc_asym_log(40, 1), log_abs(tc(40, 1)), 1e-3 * log_abs(tc(40, 1)));
  EXPECT_TRUE(std::isinf(tc_asym(400, 1)));
  EXPECT_TRUE(std::isfinite(tc_asym_log(400, 1)));
}
