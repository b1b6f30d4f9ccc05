#pragma once

#include "walls/exact_arith.hpp"

namespace walls::testing {

// Explicit formulas for a_{n,k} and b_{n,k} at fixed 1 <= k <= 5.
// They hold for 2 <= n with k <= n only.

inline Rational small_k_a(long n, long k) {
  const auto df = [](long m) { return Rational(double_factorial(m)); };
  switch (k) {
    case 1:
      return df(2 * n + 1) - df(2 * n);
    case 2:
      return (n + rat(5, 3)) * df(2 * n + 1) - df(2 * n + 2);
    case 3:
      return rat(n + 3, 3) * df(2 * n + 3) - (n + rat(79, 48)) * df(2 * n + 2);
    case 4: {
      const Rational c = rat(n * n, 6) + rat(7 * n, 6) + rat(319, 189);
      return c * df(2 * n + 3) - rat((16 * n + 31) * (n + 2), 24) * df(2 * n + 2);
    }
    case 5: {
      const Rational c = rat(63 * n * n + 609 * n + 1006, 1890) * (2 * n + 5);
      const Rational d = rat(n * n, 6) + rat(13 * n, 16) + rat(9107, 9216);
      return c * df(2 * n + 3) - d * df(2 * n + 4);
    }
    default:
      throw DomainError("small-k formula for a needs 1 <= k <= 5");
  }
}

inline Rational small_k_b(long n, long k) {
  const auto fact = [](long m) { return Rational(factorial(m)); };
  const Rational fn2 = fact(n) * fact(n);
  switch (k) {
    case 1:
      return fact(2 * n + 1) / (2 * fn2) - pow2(2 * n - 1);
    case 2:
      return n * (n + rat(5, 3)) / 4 * fact(2 * n + 1) / fn2 - n * (n + 1) * pow2(2 * n - 1);
    case 3:
      return rat(n + 3, 48) * fact(2 * n + 3) / (fact(n - 2) * fact(n + 1)) -
             (n - 1) * n * (n + 1) * (n + rat(79, 48)) * pow2(2 * n - 2);
    case 4: {
      const Rational c = rat(n * n, 6) + rat(7 * n, 6) + rat(319, 189);
      return c * fact(2 * n + 3) / (32 * fact(n - 3) * fact(n + 1)) -
             rat(16 * n + 31, 3) * (n - 2) * (n - 1) * n * (n + 1) * (n + 2) * pow2(2 * n - 6);
    }
    case 5: {
      const Rational c = rat(n * n * n, 15) + rat(73 * n * n, 90) + rat(5057 * n, 1890) + rat(503, 189);
      const Rational d = rat(n * n, 6) + rat(13 * n, 16) + rat(9107, 9216);
      return c * fact(2 * n + 4) / (128 * fact(n - 4) * fact(n + 2)) -
             d * (n - 3) * (n - 2) * (n - 1) * n * (n + 1) * (n + 2) * pow2(2 * n - 3);
    }
    default:
      throw DomainError("small-k formula for b needs 1 <= k <= 5");
  }
}

}  // namespace walls::testing
