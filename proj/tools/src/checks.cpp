#include "walls/cli/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "walls/closed_forms.hpp"
#include "walls/families.hpp"
#include "walls/series.hpp"
#include "walls/tree_child.hpp"
#include "walls/wall_tables.hpp"

namespace walls::cli {

namespace {

// Records the first failing case.
class Tally {
 public:
  template <typename L, typename R>
  void expect_eq(const L& lhs, const R& rhs, const std::string& where) {
    ++result_.cases;
    if (!result_.passed || lhs == rhs) return;
    std::ostringstream s;
    s << where << ": " << lhs << " != " << rhs;
    fail(s.str());
  }

  void expect(bool ok, const std::string& where) {
    ++result_.cases;
    if (result_.passed && !ok) fail(where);
  }

  CheckResult result() const { return result_; }

 private:
  void fail(std::string what) {
    result_.passed = false;
    result_.counterexample = std::move(what);
  }

  CheckResult result_;
};

std::string at(long n, long k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }
std::string at(long n, long m, long k) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(k) + ")";
}

CheckResult main_identity(const CheckBounds& b_) {
  Tally t;
  for (long n = 0; n <= b_.nmax; ++n) {
    for (long k = 0; k <= n; ++k) t.expect_eq(pow2_int(n - k) * a_rec(n, k), factorial(n - k + 1) * b(n, k), at(n, k));
  }
  return t.result();
}

CheckResult a_routes(const CheckBounds& b_) {
  Tally t;
  for (long n = 1; n <= b_.nmax; ++n) {
    for (long k = 1; k <= n; ++k) t.expect_eq(a_alt(n, k), a_rec(n, k), at(n, k));
  }
  return t.result();
}

CheckResult b_routes(const CheckBounds& b_) {
  Tally t;
  for (long n = 0; n <= b_.nmax; ++n) {
    for (long k = 0; k <= n; ++k) t.expect_eq(b_cor_rec(n, k), b(n, k), at(n, k));
    for (long m = 0; m <= n; ++m) t.expect_eq(b3(n, m, 0), b3_hook(n, m), at(n, m, 0));
  }
  return t.result();
}

CheckResult omega_bridge(const CheckBounds& b_) {
  Tally t;
  for (long n = 0; n <= b_.nmax; ++n) {
    for (long m = 0; n + m <= b_.nmax; ++m) {
      for (long k = 0; k <= m + 1; ++k) t.expect_eq(omega(n, m, k), b3(n + m, m, k), at(n, m, k));
    }
  }
  return t.result();
}

CheckResult omega_vanishing(const CheckBounds& b_) {
  Tally t;
  for (long n = 0; n <= b_.nmax; ++n) {
    for (long k = 1; k <= b_.kmax; ++k) t.expect_eq(omega(n, k - 1, k), 0, at(n, k - 1, k));
  }
  return t.result();
}

CheckResult omega_init_vanishing(const CheckBounds& b_) {
  Tally t;
  for (long k = 1; k <= b_.kmax; ++k) t.expect_eq(omega_init(k - 1, k), 0, at(k - 1, k));
  return t.result();
}

CheckResult semi_closed(const CheckBounds& b_) {
  Tally t;
  for (long n = 0; n <= b_.nmax; ++n) {
    for (long k = 0; k <= n; ++k) {
      t.expect_eq(a_closed(n, k), a_rec(n, k), "a" + at(n, k));
      t.expect_eq(b_closed(n, k), b(n, k), "b" + at(n, k));
    }
  }
  return t.result();
}

CheckResult omega_expansion(const CheckBounds& b_) {
  Tally t;
  const OmegaSource source = omega_value;
  for (long n = 1; n <= b_.nmax; ++n) {
    for (long k = 1; k <= b_.kmax; ++k) {
      for (long s = 1; s <= n; ++s) t.expect_eq(omega_expansion_rhs(n, k, s, source), 0, at(n, k, s));
    }
  }
  return t.result();
}

CheckResult df_sum(const CheckBounds& b_) {
  Tally t;
  for (long n = 1; n <= b_.nmax; ++n) {
    for (long k = 1; k <= b_.kmax; ++k) {
      for (long i = 0; i <= k; ++i) t.expect(df_sum_check(n, k, i), at(n, k, i));
    }
  }
  return t.result();
}

CheckResult dk_threeway(const CheckBounds& b_) {
  Tally t;
  KernelChain chain(b_.order);
  for (long k = 1; k <= b_.kmax; ++k) {
    const TSeries table = dk_from_table(k, b_.order);
    t.expect(dk_closed(k, b_.order) == table, "closed k=" + std::to_string(k));
    t.expect(chain.D(k) == table, "kernel k=" + std::to_string(k));
  }
  return t.result();
}

CheckResult kernel_residual_check(const CheckBounds& b_) {
  Tally t;
  KernelChain chain(b_.order);
  for (long k = 0; k <= b_.kmax; ++k) {
    t.expect(kernel_residual(chain.B(k), chain.F(k), chain.D(k)).is_zero(), "k=" + std::to_string(k));
  }
  return t.result();
}

CheckResult oracle(const CheckBounds& b_) {
  Tally t;
  for (int n = 0; n <= b_.nmax; ++n) {
    for (int k = 0; k <= n; ++k) {
      t.expect_eq(a_brute(n, k), a_rec(n, k), "a" + at(n, k));
      t.expect_eq(b_brute(n, k), b(n, k), "b" + at(n, k));
    }
    for (int m = 0; m <= n; ++m) {
      for (int k = 0; k <= m; ++k) t.expect_eq(b3_brute(n, m, k), b3(n, m, k), "b3" + at(n, m, k));
    }
  }
  return t.result();
}

CheckResult f_family(const CheckBounds& b_) {
  Tally t;
  for (int n = 1; n <= b_.nmax; ++n) {
    for (int k = 0; k <= n; ++k) {
      Nat total = 0;
      for (const auto& I : index_subsets(1, n, k)) total += count_linear_extensions(build_F(n, I));
      t.expect_eq(f_sum(n, k), f_closed(n, k), "sum" + at(n, k));
      t.expect_eq(total, f_closed(n, k), "posets" + at(n, k));
    }
  }
  return t.result();
}

CheckResult bu_roundtrip(const CheckBounds& b_) {
  Tally t;
  for (long n = 0; n <= b_.nmax; ++n) {
    for (long k = 0; k <= n; ++k) t.expect_eq(b_from_u(n, k), b(n, k), at(n, k));
  }
  return t.result();
}

CheckResult decomposition(const CheckBounds& b_) {
  Tally t;
  for (long n = 1; n <= b_.nmax; ++n) {
    for (long k = 0; k <= n; ++k) {
      t.expect_eq(b_decomposition(n, k), b(n, k), "sum" + at(n, k));
      t.expect_eq(b_monster(n, k), b(n, k), "collapsed" + at(n, k));
    }
  }
  return t.result();
}

CheckResult tc_routes(const CheckBounds& b_) {
  Tally t;
  for (long n = 1; n <= b_.nmax; ++n) {
    if (n >= 2) t.expect_eq(tc(n, 0), double_factorial(2 * n - 3), "trees" + at(n, 0));
    for (long k = 0; k < n; ++k) {
      const Nat v = tc(n, k);
      t.expect_eq(tc_via_b(n, k), v, "via_b" + at(n, k));
      t.expect_eq(tc_rec(n, k), v, "rec" + at(n, k));
      t.expect_eq(tc_sum(n, k), v, "sum" + at(n, k));
      t.expect_eq(tc_closed(n, k), v, "closed" + at(n, k));
      t.expect_eq(tc_chain(k, n - k - 1), v, "chain" + at(n, k));
    }
  }
  return t.result();
}

CheckResult asym_shrink(const CheckBounds& b_) {
  Tally t;
  for (long k = 0; k <= b_.kmax; ++k) {
    double prev = INFINITY;
    for (long n : {50L, 100L, 200L}) {
      const double err = std::abs(asym_relative_error(n, k));
      t.expect(err < prev, "k=" + std::to_string(k) + " n=" + std::to_string(n) + " err=" + std::to_string(err));
      prev = err;
    }
  }
  return t.result();
}

}  // namespace

const std::vector<Check>& check_registry() {
  static const std::vector<Check> checks = {
      {"main-identity", "2^(n-k) a(n,k) = (n-k+1)! b(n,k)", {30, 0, 0}, main_identity},
      {"a-routes", "downward-product recurrence for a agrees", {20, 0, 0}, a_routes},
      {"b-routes", "rational recurrence and hook base for b agree", {20, 0, 0}, b_routes},
      {"omega-bridge", "omega(n,m,k) = b3(n+m,m,k) for n+m <= nmax", {14, 0, 0}, omega_bridge},
      {"omega-vanishing", "omega(n,k-1,k) = 0", {10, 6, 0}, omega_vanishing},
      {"omega-init", "omega_init(k-1,k) = 0", {0, 8, 0}, omega_init_vanishing},
      {"semi-closed", "gamma-based closed forms for a and b", {25, 0, 0}, semi_closed},
      {"omega-expansion", "recursive expansion of omega(n,k-1,k) vanishes", {8, 5, 0}, omega_expansion},
      {"df-sum", "double-factorial sum identity", {8, 6, 0}, df_sum},
      {"dk-threeway", "D_k from table, closed form and kernel chain", {0, 8, 20}, dk_threeway},
      {"kernel-residual", "kernel equation residual is zero", {0, 5, 12}, kernel_residual_check},
      {"oracle", "brute-force linear extensions match a, b, b3", {6, 0, 0}, oracle},
      {"f-family", "f closed form, index sum and pendant chains", {6, 0, 0}, f_family},
      {"bu-roundtrip", "b -> u -> b transform is the identity", {8, 0, 0}, bu_roundtrip},
      {"decomposition", "b from ladder decomposition and collapsed sum", {12, 0, 0}, decomposition},
      {"tc-routes", "tree-child counts agree across all routes", {15, 0, 0}, tc_routes},
      {"asym-shrink", "asymptotic relative error decreases in n", {0, 3, 0}, asym_shrink},
  };
  return checks;
}

const Check* find_check(const std::string& name) {
  const auto& checks = check_registry();
  const auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

}  // namespace walls::cli
