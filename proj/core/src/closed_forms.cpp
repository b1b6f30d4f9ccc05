#include "walls/closed_forms.hpp"

#include <algorithm>
#include <mutex>

namespace walls {

const Rational& GammaTable::gamma(long k) {
  if (k < 0) throw DomainError("gamma index must be nonnegative");
  if (const Rational* hit = gamma_.find({k})) return *hit;
  // Fill upward so the recursion never nests.
  for (long j = 0; j <= k; ++j) {
    if (gamma_.find({j})) continue;
    if (j == 0) {
      gamma_.store({0}, Rational(1));
      continue;
    }
    Rational acc = 0;
    for (long i = 1; i <= j; ++i) {
      acc += *gamma_.find({j - i}) * inv_factorial(i) * Rational(double_factorial(3 * j + i - 3));
    }
    gamma_.store({j}, -acc / Rational(double_factorial(3 * j - 3)));
  }
  return *gamma_.find({k});
}

Rational GammaTable::delta(long j) { return Rational(factorial(j)) * gamma(j); }

const Rational& GammaTable::delta_rec(long i) {
  if (i < 0) throw DomainError("delta index must be nonnegative");
  if (const Rational* hit = delta_.find({i})) return *hit;
  for (long r = 0; r <= i; ++r) {
    if (delta_.find({r})) continue;
    if (r == 0) {
      delta_.store({0}, Rational(1));
      continue;
    }
    Rational acc = 0;
    for (long j = 1; j <= r; ++j) {
      acc += Rational(binomial(r, j) * double_factorial(3 * r + j - 3)) * *delta_.find({r - j});
    }
    delta_.store({r}, -acc / Rational(double_factorial(3 * r - 3)));
  }
  return *delta_.find({i});
}

namespace {

std::mutex& gamma_mutex() {
  static std::mutex m;
  return m;
}

GammaTable& shared_gamma() {
  static GammaTable table;
  return table;
}

// sum_{i=0}^{k} gamma_{k-i}/i! * (2n+k+i-1)!!, shared by the a, b and omega_0 forms.
Rational gamma_df_sum(long n, long k) {
  Rational acc = 0;
  for (long i = 0; i <= k; ++i) {
    acc += gamma(k - i) * inv_factorial(i) * Rational(double_factorial(2 * n + k + i - 1));
  }
  return acc;
}

}  // namespace

Rational gamma(long k) {
  std::lock_guard lock(gamma_mutex());
  return shared_gamma().gamma(k);
}

Rational delta(long j) {
  std::lock_guard lock(gamma_mutex());
  return shared_gamma().delta(j);
}

Rational delta_rec(long j) {
  std::lock_guard lock(gamma_mutex());
  return shared_gamma().delta_rec(j);
}

Rational gamma_defining_sum(long k) {
  Rational acc = 0;
  for (long i = 0; i <= k; ++i) {
    acc += gamma(k - i) * inv_factorial(i) * Rational(double_factorial(3 * k + i - 3));
  }
  return acc;
}

Nat a_closed(long n, long k) {
  if (k < 0 || k > n) throw DomainError("a_closed requires 0 <= k <= n");
  return as_integer(gamma_df_sum(n, k), "a_closed");
}

Nat a_diag(long n) { return a_closed(n, n); }

Nat b_closed(long n, long k) {
  if (k < 0 || k > n) throw DomainError("b_closed requires 0 <= k <= n");
  Rational scale = pow2(n - k) * inv_factorial(n - k + 1);
  return as_integer(gamma_df_sum(n, k) * scale, "b_closed");
}

Rational omega_init(long m, long k) {
  if (m < 0 || k < 0 || k > m + 1) throw DomainError("omega_init requires m >= 0 and 0 <= k <= m+1");
  return gamma_df_sum(m, k) * pow2(m - k) * inv_factorial(m - k + 1);
}

Rational alpha(long s, long p, long q) {
  if (p < 1 || q < 1) throw DomainError("alpha requires p, q >= 1");
  if (s - q - 2 * p + 2 < 0 || s - 1 + q - p < 0) throw DomainError("alpha factorial argument negative");
  Rational num(Integer(sign_pow(q - p + 1)) * factorial(s - 1 + q - p));
  Integer den = factorial(s - q - 2 * p + 2) * factorial(q - 1) * pow2_int(q - 1) * factorial(p - 1);
  return num / Rational(den);
}

Rational omega_expansion_rhs(long n, long k, long s, const OmegaSource& omega) {
  if (s < 1 || s > n) throw DomainError("omega_expansion_rhs requires 1 <= s <= n");
  auto om = [&](long nn, long mm, long kk) -> Rational {
    if (nn < -1 || mm < 0) return 0;
    return omega(nn, mm, kk);
  };
  Rational acc = 0;
  for (long p = 1; p <= (s + 1) / 2; ++p) {
    for (long q = 1; q <= s + 2 - 2 * p; ++q) {
      acc += alpha(s, p, q) * om(n - s - 1, k + s - p, k + 1 - q);
    }
  }
  for (long p = 1; p <= (s + 2) / 2; ++p) {
    for (long q = 1; q <= s + 3 - 2 * p; ++q) {
      acc -= alpha(s + 1, p, q) * om(n - s, k + s - p, k + 1 - q);
    }
  }
  return acc;
}

Rational df_sum_lhs(long n, long k, long i) {
  if (n < 1 || k < 1 || i < 0 || i > k) throw DomainError("df_sum_lhs requires n >= 1, k >= 1, 0 <= i <= k");
  Rational acc = 0;
  const Rational tail_den(double_factorial(4 * k - 3 - i));
  for (long p = 1; p <= (n + 2) / 2; ++p) {
    const long qmax = std::min(n + 3 - 2 * p, k + 1 - i);
    for (long q = 1; q <= qmax; ++q) {
      Rational term = Rational(Integer(sign_pow(q - p))) * pow2(n - p);
      term *= inv_factorial(n + 3 - 2 * p - q) * inv_factorial(p - 1);
      term *= Rational(binomial(k - i, q - 1) * double_factorial(2 * n + 4 * k - 2 * p - 2 * q + 1 - i));
      acc += term / tail_den;
    }
  }
  return acc;
}

Rational df_sum_rhs(long n, long k) { return pow2(n - 1) * Rational(binomial(n + 3 * k - 2, n)); }

bool df_sum_check(long n, long k, long i) { return df_sum_lhs(n, k, i) == df_sum_rhs(n, k); }

}  // namespace walls
