#include "core/lift.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace omf {

namespace {

FracSeries to_frac(const PolySeries& s) {
  return s.map([](const LaurentPoly& c) { return PoleFraction(c); });
}

JacobiSeries zero_layer(int weight, int nvars, long m, long prec24) {
  return {weight, nvars, static_cast<int>(m), FracSeries::zero(prec24)};
}

long as_long(const Rational& r, const char* what) {
  if (!is_integer(r)) throw std::domain_error(what);
  return r.get_num().get_si();
}

bool first_nonzero_positive(const std::vector<int>& e) {
  for (int v : e) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return false;
}

RatSeries eta_power(const RatSeries& eta, long e) {
  return e >= 0 ? eta.pow(e) : eta.pow(-e).inverse();
}

// Binomial with an arbitrary-precision upper argument and small k.
Integer binomial_big(const Integer& n, long k) {
  Integer num(1);
  for (long i = 0; i < k; ++i) num *= n - Integer(i);
  for (long i = 2; i <= k; ++i) num /= Integer(i);
  return num;
}

}  // namespace

bool FJSeries::is_zero() const {
  return std::all_of(layers.begin(), layers.end(),
                     [](const JacobiSeries& l) { return l.is_zero(); });
}

long FJSeries::s_valuation() const {
  for (std::size_t m = 0; m < layers.size(); ++m)
    if (!layers[m].is_zero()) return static_cast<long>(m);
  return s_prec;
}

FJSeries fj_add(const FJSeries& a, const FJSeries& b) {
  if (a.is_zero() && a.layers.empty()) return b;
  if (b.is_zero() && b.layers.empty()) return a;
  if (a.nvars != b.nvars)
    throw std::invalid_argument("mixed variable counts in s-expansion sum");
  if (a.weight != b.weight && !a.is_zero() && !b.is_zero())
    throw std::invalid_argument("mixed weights in s-expansion sum");
  FJSeries out;
  out.weight = a.is_zero() ? b.weight : a.weight;
  out.nvars = a.nvars;
  out.s_prec = std::min(a.s_prec, b.s_prec);
  for (long m = 0; m < out.s_prec; ++m)
    out.layers.push_back(jac_add(a.layers[m], b.layers[m]));
  return out;
}

FJSeries fj_scale(const FJSeries& a, const Rational& s) {
  FJSeries out = a;
  for (JacobiSeries& l : out.layers) l = jac_scale(l, s);
  return out;
}

FJSeries fj_sub(const FJSeries& a, const FJSeries& b) {
  return fj_add(a, fj_scale(b, Rational(-1)));
}

FJSeries fj_mul(const FJSeries& a, const FJSeries& b) {
  if (a.nvars != b.nvars)
    throw std::invalid_argument("mixed variable counts in s-expansion product");
  FJSeries out;
  out.weight = a.weight + b.weight;
  out.nvars = a.nvars;
  long va = a.s_valuation(), vb = b.s_valuation();
  out.s_prec = std::min(a.s_prec + vb, b.s_prec + va);
  for (long m = 0; m < out.s_prec; ++m) {
    JacobiSeries acc = zero_layer(out.weight, out.nvars, m, FracSeries().prec24());
    long ila = static_cast<long>(a.layers.size()) - 1;
    long ilb = static_cast<long>(b.layers.size()) - 1;
    for (long i = std::max(0L, m - ilb); i <= std::min(m, ila); ++i)
      acc = jac_add(acc, jac_mul(a.layers[i], b.layers[m - i]));
    out.layers.push_back(std::move(acc));
  }
  return out;
}

bool fj_equal(const FJSeries& a, const FJSeries& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.nvars != b.nvars || a.weight != b.weight) return false;
  long prec = std::min(a.s_prec, b.s_prec);
  for (long m = 0; m < prec; ++m)
    if (!jac_equal(a.layers[m], b.layers[m])) return false;
  return true;
}

FJSeries gritsenko_lift(const JacobiSeries& phi, long s_prec) {
  if (phi.weight < 1)
    throw std::invalid_argument("lift needs weight at least 1");
  FJSeries out{phi.weight, phi.nvars, s_prec, {}};
  for (long m = 0; m < s_prec; ++m) {
    if (m == 0 && phi.q0().is_zero())
      out.layers.push_back(
          zero_layer(phi.weight, phi.nvars, 0, phi.data.prec24()));
    else
      out.layers.push_back(hecke_v(phi, m));
  }
  return out;
}

PolySeries theta_block(const JacobiSeries& phi, long prec24) {
  LaurentPoly q0 = phi.q0();
  int n = phi.nvars;
  std::vector<int> zero(n, 0);
  long c00 = as_long(q0.coeff(zero), "non-integer theta-block data");

  long marg = 48;
  for (const auto& [key, c] : q0.terms())
    if (sgn(c) < 0) marg += 48 * as_long(-c, "non-integer theta-block data");
  long p = prec24 + marg;

  RatSeries eta = dedekind_eta(p);
  RatSeries eta_inv = eta.inverse();
  PolySeries t11 = theta_series(Theta::k11, p);

  FracSeries acc = promote_scalar<PoleFraction>(eta_power(eta, c00));
  for (const auto& [key, c] : q0.terms()) {
    auto e = q0.unpack(key);
    if (std::all_of(e.begin(), e.end(), [](int v) { return v == 0; }))
      continue;
    if (!first_nonzero_positive(e)) continue;  // one factor per +-r pair
    long ci = as_long(c, "non-integer theta-block data");
    std::vector<int> r(n);
    int units = 0;
    for (int i = 0; i < n; ++i) {
      if (e[i] % 2 != 0)
        throw std::domain_error("half-integer exponent in theta-block data");
      r[i] = e[i] / 2;
      units += std::abs(r[i]);
    }
    PolySeries te = t11.map([&](const LaurentPoly& coef) {
      return LaurentPoly::compose_monomial(coef, n, r);
    });
    if (ci > 0) {
      FracSeries factor = to_frac(te) * promote_scalar<PoleFraction>(eta_inv);
      for (long k = 0; k < ci; ++k) acc = acc * factor;
    } else if (ci < 0) {
      if (ci % 2 != 0 || units != 1)
        throw std::domain_error(
            "negative theta-block exponents need even c(0,r) on unit vectors");
      FracSeries base = to_frac(te * te) *
                        promote_scalar<PoleFraction>(eta_inv) *
                        promote_scalar<PoleFraction>(eta_inv);
      FracSeries inv = base.inverse();
      for (long k = 0; k < -ci / 2; ++k) acc = acc * inv;
    }
  }
  return acc.truncate(std::min(acc.prec24(), prec24 + marg))
      .map([](const PoleFraction& c) { return c.as_poly(); });
}

Rational borcherds_constant(const JacobiSeries& phi) {
  if (phi.nvars < 1)
    throw std::domain_error("rank-0 case handled by the bivariate product");
  LaurentPoly q0 = phi.q0();
  Rational c(0);
  for (const auto& [key, coef] : q0.terms()) {
    auto e = q0.unpack(key);
    for (int v : e) c += coef * rat(static_cast<long>(v) * v, 16);
  }
  return c / Rational(phi.nvars);
}

FJSeries borcherds_lift(const JacobiSeries& phi, long s_prec) {
  if (phi.weight != 0)
    throw std::invalid_argument("Borcherds input must have weight 0");
  long c_shift = as_long(borcherds_constant(phi), "fractional s-shift");
  if (c_shift < 0) throw std::domain_error("negative s-valuation");
  long c00 = as_long(phi.q0().coeff(std::vector<int>(phi.nvars, 0)),
                     "non-integer theta-block data");
  if (c00 % 2 != 0) throw std::domain_error("odd c(0,0)");

  long prec = phi.data.prec24();
  FracSeries th = to_frac(theta_block(phi, prec));

  long tail = std::max(s_prec - c_shift, 0L);
  std::vector<FracSeries> t(tail), ex(tail);
  for (long m = 1; m < tail; ++m) t[m] = hecke_v(phi, m).data;
  if (tail > 0) {
    ex[0].set(0, PoleFraction::constant(0, Rational(1)));
    // s d/ds of exp(-T) = -(s d/ds T) exp(-T), layer by layer.
    for (long m = 1; m < tail; ++m) {
      FracSeries accu;
      for (long j = 1; j <= m; ++j) accu += t[j] * ex[m - j] * Rational(j);
      ex[m] = accu * rat(-1, m);
    }
  }

  FJSeries out{static_cast<int>(c00 / 2), phi.nvars, s_prec, {}};
  for (long m = 0; m < s_prec; ++m) {
    if (m < c_shift)
      out.layers.push_back(zero_layer(out.weight, out.nvars, m, prec));
    else
      out.layers.push_back(JacobiSeries{
          out.weight, out.nvars, static_cast<int>(m), th * ex[m - c_shift]});
  }
  return out;
}

BiQSeries borcherds_rank0(const RatSeries& psi, long q1_orders,
                          long q2_orders) {
  auto coef = [&](long x) {
    long e24 = 24 * x;
    if (e24 >= psi.prec24())
      throw std::domain_error("input series too short for the product");
    Rational c = psi.get(e24);
    if (!is_integer(c)) throw std::domain_error("non-integer product exponent");
    return Integer(c.get_num());
  };
  long c0 = as_long(Rational(coef(0)), "non-integer product exponent");
  if (c0 % 24 != 0) throw std::domain_error("fractional leading shift");
  // The product ranges over m > 0 with n in Z (plus the m = 0, n > 0
  // column), so the principal part of psi tilts only the q1 exponent:
  // rho1 = c(0)/24 - sum_{n>0} n c(-n), rho2 = c(0)/24. The j - 744 input
  // reproduces the denominator identity q1^{-1} prod = j(t1) - j(t2).
  long rho2 = c0 / 24;
  long rho1 = rho2;
  for (long n = 1; 24 * n <= -psi.valuation24(); ++n)
    rho1 -= n * as_long(Rational(coef(-n)), "non-integer product exponent");

  long p1 = q1_orders - rho1;  // pre-shift exclusive order in q1
  if (p1 <= 0) throw std::invalid_argument("q1 truncation below the shift");
  // Inner support bound before the shift: pulling an exponent down by d
  // via the n = -1 factors costs at least q1^d, so factors with larger n
  // cannot reach the truncated window.
  long n2 = std::max(q2_orders - rho2, q2_orders - rho2 + p1 - 3);

  BiQSeries acc;
  {
    RatSeries unit;
    unit.set(0, Rational(1));
    acc.set(0, std::move(unit));
  }
  acc = acc.truncate(24 * p1);

  for (long m = 1; m < p1; ++m) {
    for (long n = -1; n <= n2; ++n) {
      Integer e = coef(m * n);
      if (sgn(e) == 0) continue;
      BiQSeries factor(0, 24 * p1);
      for (long k = 0; k * m < p1; ++k) {
        Rational b(binomial_big(e, k));
        if (sgn(b) == 0) break;
        if (k % 2 != 0) b = -b;
        factor.add_at(24 * k * m, RatSeries::monomial(24 * k * n, b,
                                                      RatSeries::kInfPrec));
      }
      acc = acc * factor;
    }
  }
  // m = 0 column: a pure q2 factor per n, truncated in the inner variable.
  RatSeries column;
  column = column.truncate(24 * (n2 + 1));
  column.set(0, Rational(1));
  for (long n = 1; n <= n2; ++n) {
    RatSeries factor(0, 24 * (n2 + 1));
    for (long k = 0; k * n <= n2; ++k) {
      Rational b = binomial(c0, k);
      if (sgn(b) == 0) break;
      if (k % 2 != 0) b = -b;
      factor.set(24 * k * n, b);
    }
    column = column * factor;
  }
  acc = acc * BiQSeries::monomial(0, column, BiQSeries::kInfPrec);

  acc = acc.shift(24 * rho1);
  return acc.map([&](const RatSeries& inner) {
    return inner.shift(24 * rho2).truncate(24 * q2_orders);
  });
}

long divisor_order(const JacobiSeries& phi, long n0,
                   std::span<const int> r_k) {
  if (static_cast<int>(r_k.size()) != phi.nvars)
    throw std::invalid_argument("exponent vector length");
  long m = phi.index_scale;
  if (m < 1) throw std::domain_error("needs a positive index scale");
  Rational norm0(n0);
  for (int v : r_k) norm0 -= rat(static_cast<long>(v) * v, 4 * m);
  if (sgn(norm0) >= 0)
    throw std::invalid_argument("not a singular class");

  Rational min_norm(0);
  for (const SingularEntry& s : classify(phi).entries)
    min_norm = std::min(min_norm, s.norm);

  Rational total(0);
  for (long lam = 1;; ++lam) {
    if (norm0 * Rational(lam * lam) < min_norm) break;
    long e24 = 24 * lam * lam * n0;
    if (e24 >= phi.data.prec24())
      throw std::domain_error("truncation too shallow for the divisor sum");
    const PoleFraction* pf = phi.data.peek(e24);
    if (!pf || pf->is_zero()) continue;
    std::vector<int> e(phi.nvars);
    for (int i = 0; i < phi.nvars; ++i)
      e[i] = static_cast<int>(2 * lam * r_k[i]);
    total += pf->as_poly().coeff(e);
  }
  return as_long(total, "non-integer divisor order");
}

BiQSeries tensor_left(const RatSeries& f) {
  return f.map([](const Rational& c) {
    RatSeries s;
    s.set(0, c);
    return s;
  });
}

BiQSeries tensor_right(const RatSeries& f) {
  return BiQSeries::monomial(0, f, BiQSeries::kInfPrec);
}

}  // namespace omf
