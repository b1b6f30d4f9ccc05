#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "walls/exact_arith.hpp"
#include "walls/poset.hpp"

namespace walls {

// 1-based positions i_1 < i_2 < ... < i_k.
using IndexSet = std::vector<int>;

// Labels: v_1..v_n are 0..n-1, w_1..w_n are n..2n-1 (when present), pendants x_t follow.
// F:  chain v_1 < ... < v_n, and x_t < v_{i_t}.
Poset build_F(int n, const IndexSet& I);
// F plus a chain w_1 < ... < w_n with w_n < v_n.
Poset build_Ftilde(int n, const IndexSet& I);
// Chains v and w with v_j < w_j for every j, and x_t < v_{i_t}.
Poset build_D(int n, const IndexSet& I);
// As build_D but with v_{i_t} < x_t.
Poset build_U(int n, const IndexSet& I);
// build_Ftilde(j, left) followed by build_D(n-j, right - j), joined by v_j < v_{j+1}.
Poset build_R(int n, const IndexSet& left, int j, const IndexSet& right);

// All k-subsets of {lo, ..., hi} in lexicographic order.
std::vector<IndexSet> index_subsets(int lo, int hi, int k);

// Three-row diagram; row 0 is the bottom row. A wall (r, c) sits between
// cells c and c+1 of row r. Removed cells must all lie in one row.
struct WallShape {
  std::array<int, 3> rows{0, 0, 0};
  std::vector<std::pair<int, int>> walls;
  std::vector<std::pair<int, int>> removed;

  void validate() const;
};

// Covers are row and column adjacencies between present cells, minus those
// crossed by a wall. Elements are numbered bottom row left to right, then
// middle, then top.
Poset tableau_poset(const WallShape& shape);

// Brute-force counts from tableau posets.
Nat a_brute(int n, int k, int capacity = kDefaultCapacity);
Nat b_brute(int n, int k, int capacity = kDefaultCapacity);
Nat b3_brute(int n, int m, int k, int capacity = kDefaultCapacity);

// f_{n,k} = (n-k+1)...(n+k) / (2^k k!), zero unless 0 <= k <= n.
Nat f_closed(long n, long k);
// f_{n,k} as the sum over i_1 < ... < i_k of i_1 (i_2+1) ... (i_k+k-1).
Nat f_sum(long n, long k);
// C(2n+k-1, n) f_{n,k}.
Nat ftilde(long n, long k);

// sum_{i=0}^{k} (-1)^i C(2n+k,k-i) C(n-i,k-i) (k-i)! row(i).
Integer bu_transform(long n, long k, const std::function<Integer(long)>& row);
Integer u_from_b(long n, long k);
Integer b_from_u(long n, long k);

// sum over j, s of C(2j+k-s-1, j) f_{j,k-s} * (transform of u_{n-j,.} at s with 2n+k).
Integer r_sum(long n, long k);
// Same quantity by summing e(R) over all index data.
Nat r_brute(int n, int k, int capacity = kDefaultCapacity);
// C(2n+k, n) f_{n,k} - r_{n,k}.
Integer b_decomposition(long n, long k);
// The four-fold sum collapsed to a single rational coefficient per b_{n-j,m},
// evaluated with its own memo (self-recursive in n).
Nat b_monster(long n, long k);

}  // namespace walls
