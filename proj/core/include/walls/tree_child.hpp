#pragma once

#include "walls/exact_arith.hpp"

namespace walls {

// Tree-child networks with n leaves and k reticulations.
// All exact routes return 0 for k < 0 or k >= n and require n >= 1.

// n!/(n-k)! * a_{n-1,k}.
Nat tc(long n, long k);
// n! b_{n-1,k} / 2^{n-k-1}, division checked.
Nat tc_via_b(long n, long k);
// (n-k) T(n,k) = (n+1-k)(n-k) T(n,k-1) + n(2n+k-3) T(n-1,k), T(1,0) = 1. Own memo.
Nat tc_rec(long n, long k);
// (n-k)! T(n,k) = sum_{i=0}^{k} n(2n+i-3)(n-1-i)! T(n-1,i). Own memo.
Nat tc_sum(long n, long k);
// T(k+m+1, k) = sum_{l=0}^{m} (l+2) prod_{i=l+1}^{m} (1 + k/(i+1))(2i+3k-1) T(k+l+1, k-1),
// bottoming out at T(m+1, 0) = (2m-1)!!. Own memo.
Nat tc_chain(long k, long m);
// C(n,k) sum_{i=0}^{k} C(k,i) (2n+2k-i-3)!! delta_i.
Nat tc_closed(long n, long k);

// Natural log of the asymptotic expansion through the (2n)^{-2} term.
double tc_asym_log(long n, long k);
// exp(tc_asym_log); overflows to inf for large n.
double tc_asym(long n, long k);
// asym / exact - 1, computed from logs.
double asym_relative_error(long n, long k);

}  // namespace walls
