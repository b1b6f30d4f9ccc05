#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace walls {

using Nat = mpz_class;
using Integer = mpz_class;
using Rational = mpq_class;

// Raised when an exact computation that must be integral is not.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised for arguments outside an operation's documented domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Nat factorial(long n);

// m!! with 0!! = (-1)!! = 1. Throws DomainError for m <= -2.
Nat double_factorial(long m);

// Zero outside 0 <= k <= n (including n < 0).
Nat binomial(long n, long k);

Nat catalan(long n);

// Normalized num/den. Throws DomainError when den == 0.
Rational rat(const Integer& num, const Integer& den);

// 1/m!, and 0 when m < 0.
Rational inv_factorial(long m);

// 2^e for any integer e.
Rational pow2(long e);
Integer pow2_int(long e);

// (-1)^e as +1 or -1, valid for negative e.
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

// Returns the numerator of q after checking the denominator is 1.
Integer as_integer(const Rational& q, const char* what = "value");

// Exact quotient a / d; throws IntegralityError if d does not divide a.
Integer exact_div(const Integer& a, const Integer& d, const char* what = "division");

// "p" or "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Natural log of a positive integer, accurate for values far beyond double range.
double log_abs(const Integer& z);

}  // namespace walls
