#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace symcone {

// All arithmetic in the library is exact. Rational is an arbitrary-precision
// reduced fraction with positive denominator; Integer is an arbitrary-precision
// integer. Both are backed by GMP.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Floor of a rational number towards negative infinity.
inline Integer floor_q(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer quot = n / d;
  if (n % d != 0 && n < 0) --quot;
  return quot;
}

inline Integer ceil_q(const Rational& q) { return -floor_q(-q); }

inline int sign_q(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

}  // namespace symcone
