#include "walls/wall_tables.hpp"

#include <algorithm>
#include <mutex>

namespace walls {

namespace {
const Nat kZero = 0;
const Rational kZeroQ = 0;
}  // namespace

const Nat& ATable::rec(long n, long k) {
  if (n < 0 || k < 0 || k > n) return kZero;
  if (const Nat* hit = rec_.find({n, k})) return *hit;
  if (k == 0) return rec_.store({n, 0}, double_factorial(2 * n - 1));
  Nat v = rec(n, k - 1) + Nat(2 * n + k - 1) * rec(n - 1, k);
  return rec_.store({n, k}, std::move(v));
}

const Nat& ATable::alt(long n, long k) {
  if (n < 0 || k < 0 || k > n) return kZero;
  if (const Nat* hit = alt_.find({n, k})) return *hit;
  if (k == 0) return alt_.store({n, 0}, double_factorial(2 * n - 1));
  Nat v = alt(n, k - 1);
  // The product for i is the product for i+1 times (2(i+1)+k-1); walk i downward.
  Nat prod = 1;
  for (long i = n - 1; i >= k; --i) {
    prod *= 2 * (i + 1) + k - 1;
    v += prod * alt(i, k - 1);
  }
  return alt_.store({n, k}, std::move(v));
}

std::vector<Cell> ATable::cells(long nmax, long kmax) {
  std::vector<Cell> out;
  for (long n = 0; n <= nmax; ++n) {
    for (long k = 0; k <= std::min(n, kmax); ++k) out.push_back({n, -1, k, rec(n, k)});
  }
  return out;
}

const Nat& BTable::b3(long n, long m, long k) {
  if (n < 0 || m < 0 || k < 0 || k > m || m > n) return kZero;
  if (n == 0) {
    static const Nat one = 1;
    return one;
  }
  if (const Nat* hit = b3_.find({n, m, k})) return *hit;
  Nat v = Nat(m - k + 1) * b3(n, m, k - 1) + b3(n, m - 1, k) + b3(n - 1, m, k);
  return b3_.store({n, m, k}, std::move(v));
}

const Nat& BTable::cor_rec(long n, long k) {
  if (n < 0 || k < 0 || k > n) return kZero;
  if (n == 0) {
    static const Nat one = 1;
    return one;
  }
  if (const Nat* hit = cor_.find({n, k})) return *hit;
  Rational v = rat(n - k + 2, 2) * Rational(cor_rec(n, k - 1));
  v += rat(2 * (2 * n + k - 1), n - k + 1) * Rational(cor_rec(n - 1, k));
  return cor_.store({n, k}, as_integer(v, "b_cor_rec"));
}

std::vector<Cell> BTable::cells(long nmax, long kmax) {
  std::vector<Cell> out;
  for (long n = 0; n <= nmax; ++n) {
    for (long k = 0; k <= std::min(n, kmax); ++k) out.push_back({n, -1, k, b(n, k)});
  }
  return out;
}

std::vector<Cell> BTable::cells3(long nmax) {
  std::vector<Cell> out;
  for (long n = 0; n <= nmax; ++n) {
    for (long m = 0; m <= n; ++m) {
      for (long k = 0; k <= m; ++k) out.push_back({n, m, k, b3(n, m, k)});
    }
  }
  return out;
}

Nat b3_hook(long n, long m) {
  if (m < 0 || m > n) throw DomainError("b3_hook requires 0 <= m <= n");
  return exact_div(factorial(n + m) * (n - m + 1), factorial(m) * factorial(n + 1), "b3_hook");
}

const Rational& OmegaTable::value(long n, long m, long k) {
  if (n < -1) throw DomainError("omega requires n >= -1");
  if (n == -1 || m < 0 || k < 0 || k > m + 1) return kZeroQ;
  if (const Rational* hit = memo_.find({n, m, k})) return *hit;
  if (n == 0) return memo_.store({n, m, k}, omega_init(m, k));
  if (n == 1 && m == 0) return memo_.store({n, m, k}, Rational(k == 0 ? 1 : 0));
  Rational v = value(n - 1, m + 1, k);
  v -= Rational(m - k + 2) * value(n - 1, m + 1, k - 1);
  v -= value(n - 2, m + 1, k);
  return memo_.store({n, m, k}, std::move(v));
}

Nat OmegaTable::omega(long n, long m, long k) { return as_integer(value(n, m, k), "omega"); }

namespace {

template <class T>
struct Shared {
  std::recursive_mutex mutex;
  T table;
};

Shared<ATable>& shared_a() {
  static Shared<ATable> s;
  return s;
}

Shared<BTable>& shared_b() {
  static Shared<BTable> s;
  return s;
}

Shared<OmegaTable>& shared_omega() {
  static Shared<OmegaTable> s;
  return s;
}

}  // namespace

Nat a_rec(long n, long k) {
  auto& s = shared_a();
  std::lock_guard lock(s.mutex);
  return s.table.rec(n, k);
}

Nat a_alt(long n, long k) {
  auto& s = shared_a();
  std::lock_guard lock(s.mutex);
  return s.table.alt(n, k);
}

Nat b3(long n, long m, long k) {
  auto& s = shared_b();
  std::lock_guard lock(s.mutex);
  return s.table.b3(n, m, k);
}

Nat b(long n, long k) { return b3(n, n, k); }

Nat b_cor_rec(long n, long k) {
  auto& s = shared_b();
  std::lock_guard lock(s.mutex);
  return s.table.cor_rec(n, k);
}

Nat omega(long n, long m, long k) {
  auto& s = shared_omega();
  std::lock_guard lock(s.mutex);
  return s.table.omega(n, m, k);
}

Rational omega_value(long n, long m, long k) {
  auto& s = shared_omega();
  std::lock_guard lock(s.mutex);
  return s.table.value(n, m, k);
}

}  // namespace walls
