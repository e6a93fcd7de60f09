#include "core/classical.hpp"

#include <stdexcept>
#include <vector>

namespace omf {

Rational bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("negative Bernoulli index");
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, with B_1 = -1/2.
  std::vector<Rational> b(k + 1);
  b[0] = Rational(1);
  for (int m = 1; m <= k; ++m) {
    Rational s(0);
    for (int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b[j];
    b[m] = -s / Rational(m + 1);
  }
  return b[k];
}

namespace {

Rational sigma(int k, long n) {
  Rational s(0);
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += Rational(int_pow(d, k));
  return s;
}

}  // namespace

RatSeries eisenstein(int k, long prec24) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("Eisenstein weight");
  RatSeries e(0, prec24);
  if (prec24 > 0) e.set(0, Rational(1));
  Rational c = Rational(-2 * k) / bernoulli(k);
  for (long n = 1; 24 * n < prec24; ++n) e.add_at(24 * n, c * sigma(k - 1, n));
  e.normalize();
  return e;
}

RatSeries dedekind_eta(long prec24) {
  RatSeries eta(std::min(1L, prec24), prec24);
  // eta = sum_{k in Z} (-1)^k q^{(6k+1)^2 / 24}; the k and -k branches give
  // the exponents (6k+1)^2 and (6k-1)^2 with the same sign.
  if (prec24 > 1) eta.add_at(1, Rational(1));
  for (long k = 1;; ++k) {
    Rational s(k % 2 == 0 ? 1 : -1);
    long lo = (6 * k - 1) * (6 * k - 1);
    if (lo >= prec24) break;
    eta.add_at(lo, s);
    long hi = (6 * k + 1) * (6 * k + 1);
    if (hi >= prec24) break;
    eta.add_at(hi, s);
  }
  eta.normalize();
  return eta;
}

RatSeries delta_series(long prec24) {
  // eta has valuation 1, so eta^24 needs eta only up to prec24 - 23.
  return dedekind_eta(std::max(1L, prec24 - 23)).pow(24).truncate(prec24);
}

RatSeries j_invariant(long prec24) {
  long p = prec24 + 48;
  RatSeries j = eisenstein(4, p).pow(3) * delta_series(p).inverse();
  return j.truncate(prec24);
}

PolySeries theta_series(Theta kind, long prec24) {
  PolySeries th(0, prec24);
  switch (kind) {
    case Theta::k00:
    case Theta::k01:
      // sum_{n in Z} s^n q^{n^2/2} zeta^n with s = 1 (k00) or -1 (k01).
      for (long n = 0; 12 * n * n < prec24; ++n) {
        Rational c((kind == Theta::k01 && (n % 2 != 0)) ? -1 : 1);
        th.add_at(12 * n * n, LaurentPoly::monomial(1, 0, 2 * n, c));
        if (n > 0)
          th.add_at(12 * n * n, LaurentPoly::monomial(1, 0, -2 * n, c));
      }
      break;
    case Theta::k10:
    case Theta::k11:
      // n = m + 1/2; sign (-1)^m for k11.
      for (long m = 0; 3 * (2 * m + 1) * (2 * m + 1) < prec24; ++m) {
        long e = 3 * (2 * m + 1) * (2 * m + 1);
        Rational c((kind == Theta::k11 && (m % 2 != 0)) ? -1 : 1);
        th.add_at(e, LaurentPoly::monomial(1, 0, 2 * m + 1, c));
        Rational c2 = kind == Theta::k11 ? -c : c;  // the n -> -n branch
        th.add_at(e, LaurentPoly::monomial(1, 0, -(2 * m + 1), c2));
      }
      break;
  }
  th.normalize();
  return th;
}

RatSeries theta_null(Theta kind, long prec24) {
  return theta_series(kind, prec24).map([](const LaurentPoly& p) {
    LaurentPoly v = p.substitute_one(0);
    return v.is_zero() ? Rational(0) : v.terms().begin()->second;
  });
}

FracSeries wp_series(long prec24) {
  FracSeries w(0, prec24);
  if (prec24 > 0) {
    LaurentPoly n0 = pole_basis(1, 0) * Rational(1, 12);
    n0 += LaurentPoly::constant(1, Rational(1));
    w.set(0, PoleFraction(std::move(n0), {1}));  // 1/12 + 1/D
  }
  for (long n = 1; 24 * n < prec24; ++n) {
    LaurentPoly p(1);
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      // d (zeta^d - 2 + zeta^{-d})
      p += LaurentPoly::monomial(1, 0, 2 * d, Rational(d));
      p += LaurentPoly::constant(1, Rational(-2 * d));
      p += LaurentPoly::monomial(1, 0, -2 * d, Rational(d));
    }
    w.set(24 * n, PoleFraction(std::move(p)));
  }
  return w;
}

FracSeries wp_layer(int order, long prec24) {
  FracSeries w = wp_series(prec24);
  for (int k = 0; k < order; ++k)
    w = w.map([](const PoleFraction& f) { return f.theta_op(0); });
  return w;
}

}  // namespace omf
