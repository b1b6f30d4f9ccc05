#include "walls/tree_child.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include "walls/closed_forms.hpp"
#include "walls/memo_table.hpp"
#include "walls/wall_tables.hpp"

namespace walls {

namespace {

void check_leaves(long n) {
  if (n < 1) throw DomainError("tree-child counts need n >= 1");
}

struct RouteMemo {
  std::recursive_mutex mutex;
  MemoTable<Nat, 2> table;
};

RouteMemo& rec_memo() {
  static RouteMemo m;
  return m;
}

RouteMemo& sum_memo() {
  static RouteMemo m;
  return m;
}

RouteMemo& chain_memo() {
  static RouteMemo m;
  return m;
}

const Nat kZero = 0;
const Nat kOne = 1;

const Nat& rec_value(MemoTable<Nat, 2>& memo, long n, long k) {
  if (n < 1 || k < 0 || k >= n) return kZero;
  if (n == 1) return kOne;
  if (const Nat* hit = memo.find({n, k})) return *hit;
  Nat v = Nat((n + 1 - k) * (n - k)) * rec_value(memo, n, k - 1) + Nat(n * (2 * n + k - 3)) * rec_value(memo, n - 1, k);
  return memo.store({n, k}, exact_div(v, Nat(n - k), "tc_rec"));
}

const Nat& sum_value(MemoTable<Nat, 2>& memo, long n, long k) {
  if (n < 1 || k < 0 || k >= n) return kZero;
  if (n == 1) return kOne;
  if (const Nat* hit = memo.find({n, k})) return *hit;
  Nat v = 0;
  for (long i = 0; i <= k; ++i) v += Nat(n * (2 * n + i - 3)) * factorial(n - 1 - i) * sum_value(memo, n - 1, i);
  return memo.store({n, k}, exact_div(v, factorial(n - k), "tc_sum"));
}

const Nat& chain_value(MemoTable<Nat, 2>& memo, long k, long m) {
  if (k < 0 || m < 0) return kZero;
  if (const Nat* hit = memo.find({k, m})) return *hit;
  if (k == 0) return memo.store({0, m}, double_factorial(2 * m - 1));
  Rational total = 0;
  for (long l = 0; l <= m; ++l) {
    Rational prod = 1;
    for (long i = l + 1; i <= m; ++i) prod *= (1 + rat(k, i + 1)) * (2 * i + 3 * k - 1);
    total += prod * (l + 2) * Rational(chain_value(memo, k - 1, l + 1));
  }
  return memo.store({k, m}, as_integer(total, "tc_chain"));
}

// Neumaier-compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

Nat tc(long n, long k) {
  check_leaves(n);
  if (k < 0 || k >= n) return 0;
  return exact_div(factorial(n), factorial(n - k)) * a_rec(n - 1, k);
}

Nat tc_via_b(long n, long k) {
  check_leaves(n);
  if (k < 0 || k >= n) return 0;
  return exact_div(factorial(n) * b(n - 1, k), pow2_int(n - k - 1), "tc_via_b");
}

Nat tc_rec(long n, long k) {
  check_leaves(n);
  auto& m = rec_memo();
  std::lock_guard lock(m.mutex);
  return rec_value(m.table, n, k);
}

Nat tc_sum(long n, long k) {
  check_leaves(n);
  auto& m = sum_memo();
  std::lock_guard lock(m.mutex);
  return sum_value(m.table, n, k);
}

Nat tc_chain(long k, long m) {
  if (k < 0 || m < 0) throw DomainError("tc_chain needs k >= 0 and m >= 0");
  auto& memo = chain_memo();
  std::lock_guard lock(memo.mutex);
  return chain_value(memo.table, k, m);
}

Nat tc_closed(long n, long k) {
  check_leaves(n);
  if (k < 0 || k >= n) return 0;
  Rational acc = 0;
  for (long i = 0; i <= k; ++i) {
    acc += Rational(binomial(k, i) * double_factorial(2 * n + 2 * k - i - 3)) * delta(i);
  }
  return as_integer(Rational(binomial(n, k)) * acc, "tc_closed");
}

double tc_asym_log(long n, long k) {
  if (n < 1 || k < 0 || k > n) throw DomainError("tc_asym needs n >= 1 and 0 <= k <= n");
  const double x = 2.0 * static_cast<double>(n);
  const double kk = static_cast<double>(k);
  const double r = std::sqrt(std::numbers::pi / 2.0);
  CompensatedSum corr;
  corr.add(1.0);
  corr.add(-r * kk / std::sqrt(x));
  corr.add((14 * kk * kk - 26 * kk + 11) / 12.0 / x);
  corr.add(-r * kk * (31 * kk * kk - 93 * kk + 70) / 48.0 / (x * std::sqrt(x)));
  corr.add((2900 * std::pow(kk, 4) - 14376 * std::pow(kk, 3) + 25264 * kk * kk - 19332 * kk + 5565) / 6048.0 / (x * x));
  const double c = corr.value();
  if (!(c > 0)) throw DomainError("asymptotic correction is not positive at this n");
  return log_abs(binomial(n, k)) + 0.5 * std::log(2.0) - static_cast<double>(n) +
         static_cast<double>(n + k - 1) * std::log(x) + std::log(c);
}

double tc_asym(long n, long k) { return std::exp(tc_asym_log(n, k)); }

double asym_relative_error(long n, long k) { return std::expm1(tc_asym_log(n, k) - log_abs(tc(n, k))); }

}  // namespace walls
