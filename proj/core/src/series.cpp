#include "walls/series.hpp"

#include <algorithm>
#include <sstream>

#include "walls/closed_forms.hpp"
#include "walls/wall_tables.hpp"

namespace walls {

TSeries::TSeries(long order) : coeffs_(static_cast<std::size_t>(std::max(order, 0L) + 1)) {
  if (order < 0) throw DomainError("series order must be nonnegative");
}

TSeries::TSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("series needs at least one coefficient");
}

long TSeries::valuation() const {
  for (long n = 0; n <= order(); ++n) {
    if ((*this)[n] != 0) return n;
  }
  return order() + 1;
}

TSeries TSeries::truncated(long order) const {
  if (order > this->order()) throw DomainError("cannot extend a truncated series");
  return TSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TSeries TSeries::t_deriv() const {
  TSeries r(order());
  for (long n = 0; n <= order(); ++n) r[n] = (*this)[n] * n;
  return r;
}

TSeries TSeries::shift(long s) const {
  if (s < 0) throw DomainError("negative shift");
  TSeries r(order());
  for (long n = s; n <= order(); ++n) r[n] = (*this)[n - s];
  return r;
}

TSeries TSeries::divide_by_t() const {
  if ((*this)[0] != 0) throw IntegralityError("division by t with nonzero constant term " + (*this)[0].get_str());
  if (order() == 0) throw DomainError("division by t leaves no known coefficients");
  return TSeries(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

TSeries TSeries::compose(const TSeries& inner) const {
  if (inner[0] != 0) throw DomainError("composition needs an inner series with zero constant term");
  const long n = std::min(order(), inner.order());
  TSeries g = inner.truncated(n);
  TSeries r(n);
  for (long i = n; i >= 0; --i) {
    r = r * g;
    r[0] += (*this)[i];
  }
  return r;
}

std::string TSeries::to_string() const {
  std::ostringstream out;
  for (long n = 0; n <= order(); ++n) {
    if (n) out << ' ';
    out << (*this)[n].get_str();
  }
  return out.str();
}

TSeries operator+(const TSeries& a, const TSeries& b) {
  TSeries r(std::min(a.order(), b.order()));
  for (long n = 0; n <= r.order(); ++n) r[n] = a[n] + b[n];
  return r;
}

TSeries operator-(const TSeries& a, const TSeries& b) {
  TSeries r(std::min(a.order(), b.order()));
  for (long n = 0; n <= r.order(); ++n) r[n] = a[n] - b[n];
  return r;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  TSeries r(std::min(a.order(), b.order()));
  for (long i = 0; i <= r.order(); ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

TSeries operator*(const Rational& c, const TSeries& a) {
  TSeries r(a.order());
  for (long n = 0; n <= a.order(); ++n) r[n] = c * a[n];
  return r;
}

XTSeries::XTSeries(long x_order, long t_order, long degree) : nx_(x_order), nt_(t_order), deg_(degree) {
  if (x_order < 0 || t_order < 0 || degree < 0) throw DomainError("series orders must be nonnegative");
  c_.resize(static_cast<std::size_t>((nx_ + 1) * (nt_ + 1)));
}

const Rational& XTSeries::at(long j, long n) const {
  if (!contains(j, n)) throw DomainError("coefficient outside the known region");
  return c_[index(j, n)];
}

Rational& XTSeries::at(long j, long n) {
  if (!contains(j, n)) throw DomainError("coefficient outside the known region");
  return c_[index(j, n)];
}

TSeries XTSeries::x_slice(long j) const {
  if (j < 0 || j > nx_ || j > deg_) throw DomainError("x-slice outside the known region");
  TSeries r(std::min(nt_, deg_ - j));
  for (long n = 0; n <= r.order(); ++n) r[n] = at(j, n);
  return r;
}

XTSeries XTSeries::crop(long x_order, long t_order) const {
  XTSeries r(x_order, t_order, x_order + t_order);
  for (long j = 0; j <= x_order; ++j) {
    for (long n = 0; n <= t_order; ++n) r.at(j, n) = at(j, n);
  }
  return r;
}

bool XTSeries::is_zero() const {
  for (long j = 0; j <= nx_; ++j) {
    for (long n = 0; n <= nt_; ++n) {
      if (contains(j, n) && c_[index(j, n)] != 0) return false;
    }
  }
  return true;
}

bool operator==(const XTSeries& a, const XTSeries& b) {
  if (a.nx_ != b.nx_ || a.nt_ != b.nt_ || a.deg_ != b.deg_) return false;
  for (long j = 0; j <= a.nx_; ++j) {
    for (long n = 0; n <= a.nt_; ++n) {
      if (a.contains(j, n) && a.at(j, n) != b.at(j, n)) return false;
    }
  }
  return true;
}

TSeries catalan_series(long order) {
  TSeries r(order);
  for (long n = 0; n <= order; ++n) r[n] = catalan(n);
  return r;
}

TSeries x2_series(long order) {
  TSeries r(order);
  for (long n = 1; n <= order; ++n) r[n] = catalan(n - 1);
  return r;
}

TSeries neg_pow_series(const Rational& alpha, long order) {
  TSeries r(order);
  r[0] = 1;
  for (long n = 0; n < order; ++n) r[n + 1] = r[n] * 4 * (alpha + n) / (n + 1);
  return r;
}

TSeries dk_from_table(long k, long order) {
  TSeries r(order);
  for (long n = 0; n <= order; ++n) r[n] = b(n, k);
  return r;
}

TSeries dk_closed(long k, long order) {
  if (k < 1) throw DomainError("closed form for D_k needs k >= 1 (k = 0 would need (-1)!)");
  TSeries acc(order);
  auto add_term = [&](const Rational& coeff, const Rational& exponent) {
    acc = acc + coeff * neg_pow_series(exponent, order).shift(k - 1);
  };
  if (k % 2 == 1) {
    for (long j = 0; j <= (k - 1) / 2; ++j) {
      const long h = j + (3 * k - 1) / 2;
      Rational c1 = gamma(k - 2 * j - 1) * inv_factorial(2 * j + 1) * pow2(-(j + (3 * k + 1) / 2));
      c1 *= Rational(factorial(h) * binomial(2 * j + 3 * k - 1, h));
      add_term(c1, rat(2 * j + 3 * k, 2));
      Rational c2 = gamma(k - 2 * j) * pow2(j + (3 * k - 5) / 2) * inv_factorial(2 * j);
      c2 *= Rational(factorial(j + (3 * k - 3) / 2));
      add_term(c2, rat(3 * k - 1, 2) + j);
    }
  } else {
    for (long j = 0; j <= k / 2; ++j) {
      const long h = j + (3 * k - 2) / 2;
      Rational c1 = gamma(k - 2 * j) * inv_factorial(2 * j) * pow2(-(j + 3 * k / 2));
      c1 *= Rational(factorial(h) * binomial(2 * j + 3 * k - 2, h));
      add_term(c1, rat(3 * k - 1, 2) + j);
    }
    for (long j = 0; j < k / 2; ++j) {
      Rational c2 = gamma(k - 2 * j - 1) * pow2(j + (3 * k - 4) / 2) * inv_factorial(2 * j + 1);
      c2 *= Rational(factorial(j + (3 * k - 2) / 2));
      add_term(c2, rat(3 * k, 2) + j);
    }
  }
  return acc;
}

XTSeries f0_series(long degree) {
  XTSeries f = XTSeries::triangle(degree);
  f.at(0, 0) = 1;
  return f;
}

XTSeries fk_next(const XTSeries& b_prev, long k) {
  if (k < 1) throw DomainError("fk_next needs k >= 1");
  XTSeries f(b_prev.x_order(), b_prev.t_order(), b_prev.degree());
  for (long j = 0; j <= f.x_order(); ++j) {
    for (long n = 0; n <= f.t_order(); ++n) {
      if (f.contains(j, n)) f.at(j, n) = b_prev.at(j, n) * (n + 1 - k);
    }
  }
  return f;
}

TSeries kernel_substitute(const XTSeries& f) {
  const long T = f.degree();
  if (f.x_order() != T || f.t_order() != T) throw DomainError("kernel substitution needs a triangular series");
  // F_j(t) X_2^{j+1} has valuation j+1, so the coefficients of F_j known
  // through t^{T-j} determine the product through t^{T+1}.
  const TSeries x2 = x2_series(T + 1);
  TSeries power = x2;
  TSeries sum(T + 1);
  for (long j = 0; j <= T; ++j) {
    TSeries fj(T + 1);
    for (long n = 0; n <= T - j; ++n) fj[n] = f.at(j, n);
    sum = sum + fj * power;
    power = power * x2;
  }
  return sum.divide_by_t();
}

XTSeries bk_solve(const XTSeries& f, const TSeries& d) {
  const long T = f.degree();
  if (f.x_order() != T || f.t_order() != T) throw DomainError("bk_solve needs a triangular F");
  if (d.order() < T) throw DomainError("bk_solve needs D through the triangle's degree");
  XTSeries out = XTSeries::triangle(T);
  for (long n = 0; n <= T; ++n) out.at(0, n) = d[n];
  auto prev2 = [&](long j, long n) -> Rational { return j >= 2 ? out.at(j - 2, n) : Rational(0); };
  for (long j = 1; j <= T; ++j) {
    Rational c0 = out.at(j - 1, 0) - prev2(j, 0) - f.at(j - 1, 0);
    if (c0 != 0) {
      throw IntegralityError("kernel level " + std::to_string(j) + ": inexact division by t (constant " + c0.get_str() +
                             ")");
    }
    for (long n = 0; n <= T - j; ++n) out.at(j, n) = out.at(j - 1, n + 1) - prev2(j, n + 1) - f.at(j - 1, n + 1);
  }
  return out;
}

XTSeries kernel_residual(const XTSeries& bk, const XTSeries& fk, const TSeries& dk) {
  const long T = bk.degree();
  XTSeries r = XTSeries::triangle(T);
  auto B = [&](long j, long n) -> Rational { return j >= 0 && n >= 0 ? bk.at(j, n) : Rational(0); };
  for (long j = 0; j <= T; ++j) {
    for (long n = 0; n <= T - j; ++n) {
      Rational v = B(j - 1, n) - B(j - 2, n) - B(j, n - 1);
      if (j >= 1) v -= fk.at(j - 1, n);
      if (j == 0 && n >= 1) v += dk[n - 1];
      r.at(j, n) = v;
    }
  }
  return r;
}

XTSeries bk_from_table(long k, long x_order, long t_order) {
  XTSeries r = XTSeries::rectangle(x_order, t_order);
  for (long j = 0; j <= x_order; ++j) {
    for (long m = 0; m <= t_order; ++m) r.at(j, m) = b3(m + j, m, k);
  }
  return r;
}

KernelChain::KernelChain(long degree) : degree_(degree) {
  if (degree < 0) throw DomainError("kernel chain degree must be nonnegative");
  f_.push_back(f0_series(degree));
  d_.push_back(catalan_series(degree));
  b_.push_back(bk_solve(f_.back(), d_.back()));
}

void KernelChain::advance_to(long k) {
  while (kmax() < k) {
    const long next = kmax() + 1;
    XTSeries f = fk_next(b_.back(), next);
    TSeries d = kernel_substitute(f);
    XTSeries bk = bk_solve(f, d);
    f_.push_back(std::move(f));
    d_.push_back(std::move(d));
    b_.push_back(std::move(bk));
  }
}

const XTSeries& KernelChain::B(long k) {
  advance_to(k);
  return b_.at(static_cast<std::size_t>(k));
}

const XTSeries& KernelChain::F(long k) {
  advance_to(k);
  return f_.at(static_cast<std::size_t>(k));
}

const TSeries& KernelChain::D(long k) {
  advance_to(k);
  return d_.at(static_cast<std::size_t>(k));
}

TSeries dk_kernel(long k, long order) {
  if (k < 0) throw DomainError("dk_kernel needs k >= 0");
  KernelChain chain(order);
  return chain.D(k);
}

}  // namespace walls
