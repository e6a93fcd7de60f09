#pragma once

// Exact rational scalars. GMP's mpq_class already maintains the canonical
// form we need (reduced fraction, positive denominator), so the engine uses
// it directly and adds only the small helpers the series code wants.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace omf {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational rat_pow(const Rational& base, long e) {
  if (e < 0) {
    if (is_zero(base)) throw std::domain_error("zero to negative power");
    return rat(1) / rat_pow(base, -e);
  }
  Rational acc(1), b(base);
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline Integer int_pow(long base, long e) {
  Integer acc(1), b(base);
  for (; e > 0; e >>= 1, b *= b)
    if (e & 1) acc *= b;
  return acc;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

// "num/den" with the denominator omitted when it is 1.
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational rat_parse(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

}  // namespace omf
