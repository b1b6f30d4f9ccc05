#pragma once

#include <vector>

#include "walls/closed_forms.hpp"
#include "walls/exact_arith.hpp"
#include "walls/memo_table.hpp"

namespace walls {

// One filled table cell; m is unused (-1) for two-index tables.
struct Cell {
  long n;
  long m;
  long k;
  Nat value;
};

// Tableaux of shape (n,n,k) with walls between all bottom-row cells.
// a_{n,0} = (2n-1)!!, a_{n,k} = a_{n,k-1} + (2n+k-1) a_{n-1,k}, zero for k > n.
class ATable {
 public:
  explicit ATable(long dense_extent = MemoTable<Nat, 2>::default_extent()) : rec_(dense_extent), alt_(dense_extent) {}

  const Nat& rec(long n, long k);

  // a_{n,k} = a_{n,k-1} + sum_{i=k}^{n-1} prod_{j=i}^{n-1} (2(j+1)+k-1) a_{i,k-1},
  // evaluated with its own memo so it cross-checks rec.
  const Nat& alt(long n, long k);

  // Row-major (n, then k) cells for 0 <= k <= min(n, kmax), n <= nmax.
  std::vector<Cell> cells(long nmax, long kmax);

 private:
  MemoTable<Nat, 2> rec_;
  MemoTable<Nat, 2> alt_;
};

// b_{n,m,k}: deformed (n,m,m) diagrams with k top-row cells kept.
class BTable {
 public:
  explicit BTable(long dense_extent = MemoTable<Nat, 3>::default_extent())
      : b3_(dense_extent), cor_(MemoTable<Nat, 2>::default_extent()) {}

  // (m-k+1) b_{n,m,k-1} + b_{n,m-1,k} + b_{n-1,m,k}; b_{0,0,0} = 1; zero off 0 <= k <= m <= n.
  const Nat& b3(long n, long m, long k);
  const Nat& b(long n, long k) { return b3(n, n, k); }

  // b_{n,k} = (n-k+2)/2 b_{n,k-1} + 2(2n+k-1)/(n-k+1) b_{n-1,k}, own memo.
  const Nat& cor_rec(long n, long k);

  std::vector<Cell> cells(long nmax, long kmax);
  std::vector<Cell> cells3(long nmax);

 private:
  MemoTable<Nat, 3> b3_;
  MemoTable<Nat, 2> cor_;
};

// (n+m)! (n-m+1) / (m! (n+1)!). Throws DomainError if m > n or m < 0.
Nat b3_hook(long n, long m);

// omega_{n,m,k} by descending-n recursion closed at n = 0 with omega_init.
class OmegaTable {
 public:
  // Exact value; zero for n = -1, k < 0, k > m+1 or m < 0.
  const Rational& value(long n, long m, long k);
  // value() asserted integral.
  Nat omega(long n, long m, long k);

 private:
  MemoTable<Rational, 3> memo_;
};

// Thread-safe wrappers over process-wide tables.
Nat a_rec(long n, long k);
Nat a_alt(long n, long k);
Nat b3(long n, long m, long k);
Nat b(long n, long k);
Nat b_cor_rec(long n, long k);
Nat omega(long n, long m, long k);
Rational omega_value(long n, long m, long k);

}  // namespace walls
