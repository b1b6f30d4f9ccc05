#include "walls/exact_arith.hpp"

#include <cmath>

namespace walls {

Nat factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative argument " + std::to_string(n));
  Nat r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Nat double_factorial(long m) {
  if (m <= -2) throw DomainError("double factorial undefined at " + std::to_string(m));
  if (m <= 0) return 1;
  Nat r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

Nat binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Nat r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Nat catalan(long n) {
  if (n < 0) return 0;
  Nat r = binomial(2 * n, n);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return r;
}

Rational rat(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational inv_factorial(long m) {
  if (m < 0) return 0;
  return Rational(Integer(1), factorial(m));
}

Integer pow2_int(long e) {
  if (e < 0) throw DomainError("negative exponent for integer power of two");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

Rational pow2(long e) {
  if (e >= 0) return Rational(pow2_int(e));
  return Rational(Integer(1), pow2_int(-e));
}

Integer as_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) {
    throw IntegralityError(std::string(what) + " is not integral: " + q.get_str());
  }
  return q.get_num();
}

Integer exact_div(const Integer& a, const Integer& d, const char* what) {
  if (d == 0) throw DomainError(std::string(what) + ": divide by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
    throw IntegralityError(std::string(what) + ": " + a.get_str() + " not divisible by " + d.get_str());
  }
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

double log_abs(const Integer& z) {
  if (z == 0) return -INFINITY;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace walls
