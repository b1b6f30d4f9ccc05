#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "walls/exact_arith.hpp"

using namespace walls;

TEST(ExactArith, FactorialValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_THROW(factorial(-1), DomainError);
}

TEST(ExactArith, DoubleFactorialValuesAndConventions) {
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(5), 15);
  EXPECT_EQ(double_factorial(6), 48);
  EXPECT_THROW(double_factorial(-2), DomainError);
  EXPECT_THROW(double_factorial(-3), DomainError);
}

TEST(ExactArith, BinomialValuesAndZeroExtension) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(binomial(-2, 1), 0);
}

TEST(ExactArith, RationalNormalization) {
  EXPECT_EQ(rat(2, 4), Rational(1, 2));
  const Rational q = rat(-3, -6);
  EXPECT_EQ(q.get_num(), 1);
  EXPECT_EQ(q.get_den(), 2);
  const Rational z = rat(0, 7);
  EXPECT_EQ(z.get_num(), 0);
  EXPECT_EQ(z.get_den(), 1);
  EXPECT_EQ(rat(3, -6).get_num(), -1);
  EXPECT_THROW(rat(1, 0), DomainError);
}

TEST(ExactArith, IntegralityChecks) {
  EXPECT_EQ(as_integer(rat(10, 5)), 2);
  EXPECT_THROW(as_integer(rat(1, 3)), IntegralityError);
  EXPECT_EQ(exact_div(12, 4), 3);
  EXPECT_THROW(exact_div(7, 2), IntegralityError);
}

TEST(ExactArith, HelperValues) {
  EXPECT_EQ(catalan(6), 132);
  EXPECT_EQ(inv_factorial(-1), 0);
  EXPECT_EQ(inv_factorial(3), rat(1, 6));
  EXPECT_EQ(pow2(-2), rat(1, 4));
  EXPECT_EQ(pow2(5), 32);
  EXPECT_EQ(sign_pow(-3), -1);
  EXPECT_EQ(sign_pow(-4), 1);
  EXPECT_EQ(to_string(rat(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(rat(8, 4)), "2");
}

TEST(ExactArith, NoOverflowAtLargeSizes) {
  const Nat big = factorial(60) * double_factorial(61);
  EXPECT_GT(big, Nat("1000000000000000000000000000000000000000000000000000"));
  EXPECT_EQ(big / factorial(60), double_factorial(61));
}

TEST(ExactArithProperty, OddTimesEvenDoubleFactorialIsFactorial) {
  for (long n = 0; n <= 50; ++n) {
    EXPECT_EQ(double_factorial(2 * n - 1) * double_factorial(2 * n), factorial(2 * n)) << n;
  }
}

TEST(ExactArithProperty, OddDoubleFactorialAndCatalan) {
  for (long n = 0; n <= 50; ++n) {
    const Nat cat = binomial(2 * n, n) / (n + 1);
    EXPECT_EQ(pow2_int(n) * double_factorial(2 * n - 1), factorial(n + 1) * cat) << n;
  }
}

TEST(ExactArithProperty, PascalRule) {
  for (long n = 1; n <= 40; ++n) {
    for (long k = 1; k <= n; ++k) {
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << "," << k;
    }
  }
}

TEST(ExactArithProperty, RationalSumClearsDenominators) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int trial = 0; trial < 500; ++trial) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational lhs = (rat(a, b) + rat(c, d)) * b * d;
    EXPECT_EQ(lhs, Rational(a * d + c * b));
    EXPECT_EQ(lhs.get_den(), 1);
  }
}

TEST(ExactArith, LogOfHugeInteger) {
  const Nat big = factorial(400);
  EXPECT_NEAR(log_abs(big), std::lgamma(401.0), 1e-9 * std::lgamma(401.0));
  EXPECT_NEAR(log_abs(Nat(1024)), std::log(1024.0), 1e-14);
}
