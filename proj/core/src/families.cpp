#include "walls/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "walls/memo_table.hpp"
#include "walls/wall_tables.hpp"

namespace walls {

namespace {

void check_index_set(const IndexSet& I, int lo, int hi, const char* what) {
  for (std::size_t t = 0; t < I.size(); ++t) {
    if (I[t] < lo || I[t] > hi || (t > 0 && I[t] <= I[t - 1])) {
      throw DomainError(std::string(what) + ": index set must be strictly increasing within [" + std::to_string(lo) +
                        "," + std::to_string(hi) + "]");
    }
  }
}

void add_chain(std::vector<Cover>& covers, int first, int len) {
  for (int i = 0; i + 1 < len; ++i) covers.emplace_back(first + i, first + i + 1);
}

Poset build_ladder(int n, const IndexSet& I, bool pendants_above) {
  if (n < 0) throw DomainError("family size must be nonnegative");
  check_index_set(I, 1, n, "build_D/build_U");
  std::vector<Cover> covers;
  add_chain(covers, 0, n);
  add_chain(covers, n, n);
  for (int j = 0; j < n; ++j) covers.emplace_back(j, n + j);
  int x = 2 * n;
  for (int i : I) {
    covers.push_back(pendants_above ? Cover{i - 1, x} : Cover{x, i - 1});
    ++x;
  }
  return Poset(x, std::move(covers));
}

}  // namespace

Poset build_F(int n, const IndexSet& I) {
  if (n < 0) throw DomainError("family size must be nonnegative");
  check_index_set(I, 1, n, "build_F");
  std::vector<Cover> covers;
  add_chain(covers, 0, n);
  int x = n;
  for (int i : I) covers.emplace_back(x++, i - 1);
  return Poset(x, std::move(covers));
}

Poset build_Ftilde(int n, const IndexSet& I) {
  if (n < 1) throw DomainError("build_Ftilde needs n >= 1");
  check_index_set(I, 1, n, "build_Ftilde");
  std::vector<Cover> covers;
  add_chain(covers, 0, n);
  add_chain(covers, n, n);
  covers.emplace_back(2 * n - 1, n - 1);
  int x = 2 * n;
  for (int i : I) covers.emplace_back(x++, i - 1);
  return Poset(x, std::move(covers));
}

Poset build_D(int n, const IndexSet& I) { return build_ladder(n, I, false); }

Poset build_U(int n, const IndexSet& I) { return build_ladder(n, I, true); }

Poset build_R(int n, const IndexSet& left, int j, const IndexSet& right) {
  if (j < 1 || j > n) throw DomainError("build_R needs 1 <= j <= n");
  check_index_set(left, 1, j, "build_R left");
  check_index_set(right, j + 1, n, "build_R right");
  auto v = [](int i) { return i - 1; };
  auto w = [n](int i) { return n + i - 1; };
  std::vector<Cover> covers;
  add_chain(covers, 0, n);
  // Left block: w_1 < ... < w_j < v_j.
  for (int i = 1; i < j; ++i) covers.emplace_back(w(i), w(i + 1));
  covers.emplace_back(w(j), v(j));
  // Right block: w_{j+1} < ... < w_n with v_i < w_i.
  for (int i = j + 1; i < n; ++i) covers.emplace_back(w(i), w(i + 1));
  for (int i = j + 1; i <= n; ++i) covers.emplace_back(v(i), w(i));
  int x = 2 * n;
  for (int i : left) covers.emplace_back(x++, v(i));
  for (int i : right) covers.emplace_back(x++, v(i));
  return Poset(x, std::move(covers));
}

std::vector<IndexSet> index_subsets(int lo, int hi, int k) {
  std::vector<IndexSet> out;
  const int span = hi - lo + 1;
  if (k < 0 || k > std::max(span, 0)) return out;
  IndexSet cur(k);
  for (int t = 0; t < k; ++t) cur[t] = lo + t;
  while (true) {
    out.push_back(cur);
    int t = k - 1;
    while (t >= 0 && cur[t] == hi - (k - 1 - t)) --t;
    if (t < 0) break;
    ++cur[t];
    for (int u = t + 1; u < k; ++u) cur[u] = cur[u - 1] + 1;
  }
  return out;
}

void WallShape::validate() const {
  for (int r = 0; r < 3; ++r) {
    if (rows[r] < 0) throw DomainError("row length must be nonnegative");
  }
  if (rows[1] > rows[0] || rows[2] > rows[1]) throw DomainError("row lengths must weakly decrease upward");
  for (auto [r, c] : walls) {
    if (r < 0 || r > 2 || c < 0 || c + 1 >= rows[r]) throw DomainError("wall position outside its row");
  }
  std::set<int> removal_rows;
  std::set<std::pair<int, int>> seen;
  for (auto [r, c] : removed) {
    if (r < 0 || r > 2 || c < 0 || c >= rows[r]) throw DomainError("removed cell outside the diagram");
    if (!seen.insert({r, c}).second) throw DomainError("cell removed twice");
    removal_rows.insert(r);
  }
  if (removal_rows.size() > 1) throw DomainError("removed cells must lie in a single row");
}

Poset tableau_poset(const WallShape& shape) {
  shape.validate();
  const std::set<std::pair<int, int>> removed(shape.removed.begin(), shape.removed.end());
  const std::set<std::pair<int, int>> walls(shape.walls.begin(), shape.walls.end());
  std::map<std::pair<int, int>, int> label;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < shape.rows[r]; ++c) {
      if (!removed.count({r, c})) label.emplace(std::pair{r, c}, static_cast<int>(label.size()));
    }
  }
  std::vector<Cover> covers;
  for (const auto& [cell, id] : label) {
    auto [r, c] = cell;
    auto right = label.find({r, c + 1});
    if (right != label.end() && !walls.count({r, c})) covers.emplace_back(id, right->second);
    auto up = label.find({r + 1, c});
    if (up != label.end()) covers.emplace_back(id, up->second);
  }
  return Poset(static_cast<int>(label.size()), std::move(covers));
}

namespace {

std::vector<std::pair<int, int>> row_walls(int row, int len) {
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c + 1 < len; ++c) out.emplace_back(row, c);
  return out;
}

std::vector<std::pair<int, int>> complement_cells(int row, int len, const IndexSet& keep) {
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < len; ++c) {
    if (!std::binary_search(keep.begin(), keep.end(), c + 1)) out.emplace_back(row, c);
  }
  return out;
}

}  // namespace

Nat a_brute(int n, int k, int capacity) {
  if (k < 0 || k > n) return 0;
  WallShape shape{{n, n, k}, row_walls(0, n), {}};
  return count_linear_extensions(tableau_poset(shape), capacity);
}

Nat b_brute(int n, int k, int capacity) {
  if (k < 0 || k > n) return 0;
  Nat total = 0;
  for (const auto& keep : index_subsets(1, n, k)) {
    WallShape shape{{n, n, n}, row_walls(0, n), complement_cells(0, n, keep)};
    total += count_linear_extensions(tableau_poset(shape), capacity);
  }
  return total;
}

Nat b3_brute(int n, int m, int k, int capacity) {
  if (k < 0 || k > m || m > n) return 0;
  Nat total = 0;
  for (const auto& keep : index_subsets(1, m, k)) {
    WallShape shape{{n, m, m}, row_walls(2, m), complement_cells(2, m, keep)};
    total += count_linear_extensions(tableau_poset(shape), capacity);
  }
  return total;
}

Nat f_closed(long n, long k) {
  if (k < 0 || k > n) return 0;
  Nat num = 1;
  for (long i = n - k + 1; i <= n + k; ++i) num *= i;
  return exact_div(num, pow2_int(k) * factorial(k), "f_closed");
}

Nat f_sum(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k == 0) return 1;
  // acc[i] = sum over prefixes i_1 < ... < i_t = i of the partial product.
  std::vector<Nat> acc(static_cast<std::size_t>(n + 1), 0);
  for (long i = 1; i <= n; ++i) acc[i] = i;
  for (long t = 2; t <= k; ++t) {
    std::vector<Nat> next(static_cast<std::size_t>(n + 1), 0);
    Nat prefix = 0;
    for (long i = 1; i <= n; ++i) {
      next[i] = prefix * (i + t - 1);
      prefix += acc[i];
    }
    acc = std::move(next);
  }
  Nat total = 0;
  for (const auto& v : acc) total += v;
  return total;
}

Nat ftilde(long n, long k) { return binomial(2 * n + k - 1, n) * f_closed(n, k); }

Integer bu_transform(long n, long k, const std::function<Integer(long)>& row) {
  Integer acc = 0;
  for (long i = 0; i <= k; ++i) {
    const Integer c = binomial(2 * n + k, k - i) * binomial(n - i, k - i) * factorial(k - i);
    if (c == 0) continue;
    acc += sign_pow(i) * c * row(i);
  }
  return acc;
}

Integer u_from_b(long n, long k) {
  return bu_transform(n, k, [n](long i) { return Integer(b(n, i)); });
}

Integer b_from_u(long n, long k) {
  return bu_transform(n, k, [n](long i) { return u_from_b(n, i); });
}

Integer r_sum(long n, long k) {
  Integer total = 0;
  for (long j = 1; j <= n; ++j) {
    const long rest = n - j;
    for (long s = 0; s <= k; ++s) {
      const Integer left = binomial(2 * j + k - s - 1, j) * f_closed(j, k - s);
      if (left == 0) continue;
      Integer right = 0;
      for (long i = 0; i <= s; ++i) {
        const Integer c = binomial(2 * n + k, s - i) * binomial(rest - i, s - i) * factorial(s - i);
        if (c == 0) continue;
        right += sign_pow(i) * c * u_from_b(rest, i);
      }
      total += left * right;
    }
  }
  return total;
}

Nat r_brute(int n, int k, int capacity) {
  Nat total = 0;
  for (int j = 1; j <= n; ++j) {
    for (int s = 0; s <= k; ++s) {
      for (const auto& left : index_subsets(1, j, k - s)) {
        for (const auto& right : index_subsets(j + 1, n, s)) {
          total += count_linear_extensions(build_R(n, left, j, right), capacity);
        }
      }
    }
  }
  return total;
}

Integer b_decomposition(long n, long k) { return binomial(2 * n + k, n) * f_closed(n, k) - r_sum(n, k); }

namespace {

struct MonsterMemo {
  std::recursive_mutex mutex;
  MemoTable<Nat, 2> table;
};

MonsterMemo& monster_memo() {
  static MonsterMemo memo;
  return memo;
}

const Nat& monster_value(MonsterMemo& memo, long n, long k) {
  static const Nat zero = 0;
  static const Nat one = 1;
  if (n < 0 || k < 0 || k > n) return zero;
  if (n == 0) return one;
  if (const Nat* hit = memo.table.find({n, k})) return *hit;
  Rational sub = 0;
  for (long j = 1; j <= n; ++j) {
    for (long s = 0; s <= k; ++s) {
      // 1/(negative)! = 0 removes these summands.
      if (j - k + s < 0 || n - j - s < 0) continue;
      for (long m = 0; m <= s; ++m) {
        const Nat& bm = monster_value(memo, n - j, m);
        if (bm == 0) continue;
        Integer num = Integer(j + k - s) * factorial(n - j - m) * factorial(k + 2 * j - m - 1);
        Integer den = pow2_int(k - s) * factorial(j - k + s) * factorial(k - s) * factorial(j) * factorial(s - m) *
                      factorial(n - j - s);
        sub += rat(num * bm, den);
      }
    }
  }
  Rational v = Rational(binomial(2 * n + k, n) * f_closed(n, k)) - sub;
  return memo.table.store({n, k}, as_integer(v, "b_monster"));
}

}  // namespace

Nat b_monster(long n, long k) {
  auto& memo = monster_memo();
  std::lock_guard lock(memo.mutex);
  return monster_value(memo, n, k);
}

}  // namespace walls
