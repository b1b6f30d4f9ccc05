#pragma once

#include <functional>

#include "walls/exact_arith.hpp"
#include "walls/memo_table.hpp"

namespace walls {

// gamma_k from gamma_0 = 1 and
//   sum_{i=0}^{k} gamma_{k-i} / i! * (3k+i-3)!! = 0   (k >= 1),
// and delta_j = j! * gamma_j.
class GammaTable {
 public:
  const Rational& gamma(long k);
  Rational delta(long j);
  // delta_i = -sum_{j=1}^{i} C(i,j) (3i+j-3)!! / (3i-3)!! * delta_{i-j}, delta_0 = 1.
  const Rational& delta_rec(long i);

 private:
  MemoTable<Rational, 1> gamma_;
  MemoTable<Rational, 1> delta_;
};

// Process-wide table behind the free functions below. Guarded by a mutex.
Rational gamma(long k);
Rational delta(long j);
Rational delta_rec(long j);

// sum_{i=0}^{k} gamma_{k-i}/i! * (3k+i-3)!!, re-summed from stored gammas.
Rational gamma_defining_sum(long k);

// a_{n,k} = sum_{i=0}^{k} gamma_{k-i}/i! * (2n+k+i-1)!!, for 0 <= k <= n.
Nat a_closed(long n, long k);
Nat a_diag(long n);

// b_{n,k} = sum_{i=0}^{k} gamma_{k-i}/i! * 2^{n-k}/(n-k+1)! * (2n+k+i-1)!!, for 0 <= k <= n.
Nat b_closed(long n, long k);

// omega_{0,m,k}; integral for k <= m and zero at k = m + 1.
Rational omega_init(long m, long k);

// alpha_s(p,q) = (-1)^{q-p+1} (s-1+q-p)! / ((s-q-2p+2)! (q-1)! 2^{q-1} (p-1)!).
Rational alpha(long s, long p, long q);

using OmegaSource = std::function<Rational(long n, long m, long k)>;

// Right-hand side of the s-step expansion of omega_{n,k-1,k}.
Rational omega_expansion_rhs(long n, long k, long s, const OmegaSource& omega);

// Left-hand triple sum of the double-factorial identity, and its closed value
// 2^{n-1} C(n+3k-2, n).
Rational df_sum_lhs(long n, long k, long i);
Rational df_sum_rhs(long n, long k);
bool df_sum_check(long n, long k, long i);

}  // namespace walls
