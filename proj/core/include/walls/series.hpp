#pragma once

#include <string>
#include <vector>

#include "walls/exact_arith.hpp"

namespace walls {

// Power series in t known exactly through t^order.
class TSeries {
 public:
  TSeries() : coeffs_(1) {}
  explicit TSeries(long order);
  explicit TSeries(std::vector<Rational> coeffs);

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](long n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Rational& operator[](long n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  // Index of the first nonzero coefficient, or order()+1 if none.
  long valuation() const;

  TSeries truncated(long order) const;
  // t * d/dt.
  TSeries t_deriv() const;
  // t^s * f, same order.
  TSeries shift(long s) const;
  // f / t; throws IntegralityError if the constant term is nonzero. Order drops by one.
  TSeries divide_by_t() const;
  // f(g(t)) for g with zero constant term.
  TSeries compose(const TSeries& inner) const;

  // "c0 c1 ... cN", fractions as p/q.
  std::string to_string() const;

  friend bool operator==(const TSeries& a, const TSeries& b) { return a.coeffs_ == b.coeffs_; }
  friend TSeries operator+(const TSeries& a, const TSeries& b);
  friend TSeries operator-(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const Rational& c, const TSeries& a);

 private:
  std::vector<Rational> coeffs_;
};

// Bivariate series sum c(j,n) x^j t^n known on j <= x_order, n <= t_order, j + n <= degree.
class XTSeries {
 public:
  XTSeries(long x_order, long t_order, long degree);
  static XTSeries rectangle(long x_order, long t_order) { return {x_order, t_order, x_order + t_order}; }
  static XTSeries triangle(long degree) { return {degree, degree, degree}; }

  long x_order() const { return nx_; }
  long t_order() const { return nt_; }
  long degree() const { return deg_; }
  bool contains(long j, long n) const { return j >= 0 && n >= 0 && j <= nx_ && n <= nt_ && j + n <= deg_; }

  const Rational& at(long j, long n) const;
  Rational& at(long j, long n);

  // Coefficient of x^j as a series in t, order min(t_order, degree - j).
  TSeries x_slice(long j) const;
  // Restriction to a smaller region; throws DomainError if not contained.
  XTSeries crop(long x_order, long t_order) const;
  bool is_zero() const;

  friend bool operator==(const XTSeries& a, const XTSeries& b);

 private:
  std::size_t index(long j, long n) const { return static_cast<std::size_t>(j * (nt_ + 1) + n); }
  long nx_, nt_, deg_;
  std::vector<Rational> c_;
};

TSeries catalan_series(long order);
// t * C(t).
TSeries x2_series(long order);
// (1 - 4t)^{-alpha}.
TSeries neg_pow_series(const Rational& alpha, long order);

// sum_n b_{n,k} t^n.
TSeries dk_from_table(long k, long order);
// Explicit two-sum expression in gamma and powers of (1-4t); k >= 1.
TSeries dk_closed(long k, long order);

// The constant series 1 on a triangle of the given degree.
XTSeries f0_series(long degree);
// F_k = t dB_{k-1}/dt + (1-k) B_{k-1}.
XTSeries fk_next(const XTSeries& b_prev, long k);
// (x/t) F at x = X_2(t); F must be a triangle.
TSeries kernel_substitute(const XTSeries& f);
// Solves (x - x^2 - t) B = x F - t D level by level in x, checking every division by t.
XTSeries bk_solve(const XTSeries& f, const TSeries& d);
// (x - x^2 - t) B - (x F - t D) on the triangle of B.
XTSeries kernel_residual(const XTSeries& bk, const XTSeries& fk, const TSeries& dk);
// Entry (j, m) = b_{m+j,m,k}.
XTSeries bk_from_table(long k, long x_order, long t_order);

// Runs B_{k-1} -> F_k -> D_k -> B_k from B_0 on a fixed triangle.
// Entries with j + n <= degree are exact.
class KernelChain {
 public:
  explicit KernelChain(long degree);

  long degree() const { return degree_; }
  long kmax() const { return static_cast<long>(b_.size()) - 1; }
  void advance_to(long k);

  const XTSeries& B(long k);
  const XTSeries& F(long k);
  const TSeries& D(long k);

 private:
  long degree_;
  std::vector<XTSeries> b_, f_;
  std::vector<TSeries> d_;
};

// D_k through t^order from the kernel chain.
TSeries dk_kernel(long k, long order);

}  // namespace walls
