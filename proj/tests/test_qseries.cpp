#include "doctest.h"

#include "core/qseries.hpp"

using namespace omf;

namespace {

// 1 - q to the given exclusive e24 precision.
RatSeries one_minus_q(long prec24) {
  RatSeries s(0, prec24);
  s.set(0, Rational(1));
  if (prec24 > 24) s.set(24, Rational(-1));
  return s;
}

}  // namespace

TEST_CASE("geometric series inverse") {
  RatSeries inv = one_minus_q(240).inverse();
  for (long n = 0; n < 10; ++n) CHECK(inv.get(24 * n) == Rational(1));
  CHECK((inv * one_minus_q(240)).get(0) == Rational(1));
  CHECK((inv * one_minus_q(240)) ==
        RatSeries::monomial(0, Rational(1), 240));
}

TEST_CASE("default-constructed series is an unlimited-precision zero") {
  RatSeries z;
  CHECK(z.is_zero());
  CHECK(z.prec24() == RatSeries::kInfPrec);
  RatSeries s = RatSeries::monomial(24, Rational(7), 120);
  CHECK((z + s) == s);
  CHECK((z + s).prec24() == 120);
  // accumulating into a fresh slot keeps full precision of the summand
  RatSeries acc;
  acc += s;
  acc += s;
  CHECK(acc.get(24) == Rational(14));
}

TEST_CASE("product precision follows valuations") {
  // a = q + O(q^5), b = 1 + O(q^3): ab is known through O(q^4) only... but
  // a*b gains from a's valuation: prec = min(5*24 + 0, 3*24 + 24).
  RatSeries a = RatSeries::monomial(24, Rational(1), 120);
  RatSeries b = RatSeries::monomial(0, Rational(1), 72);
  CHECK((a * b).prec24() == 96);
  CHECK((a * b).valuation24() == 24);
}

TEST_CASE("exp matches factorial coefficients") {
  RatSeries q = RatSeries::monomial(24, Rational(1), 144);
  RatSeries e = q.exp();
  Rational fact(1);
  for (long n = 1; n < 6; ++n) {
    fact *= Rational(n);
    CHECK(e.get(24 * n) == Rational(1) / fact);
  }
  CHECK(e.get(0) == Rational(1));
  // exp turns sums into products
  RatSeries q2 = RatSeries::monomial(48, Rational(3), 144);
  CHECK((q + q2).exp() == q.exp() * q2.exp());
}

TEST_CASE("pow, shift, scale_variable, truncate") {
  RatSeries g = one_minus_q(240);
  CHECK(g.pow(0).get(0) == Rational(1));
  CHECK(g.pow(3).get(24) == Rational(-3));
  CHECK(g.shift(24).valuation24() == 24);
  RatSeries d = g.scale_variable(2);
  CHECK(d.get(48) == Rational(-1));
  CHECK(d.prec24() == 480);
  CHECK(g.truncate(24).prec24() == 24);
  CHECK(g.truncate(24).get(0) == Rational(1));
}

TEST_CASE("series with polynomial coefficients and pf inversion") {
  // f = D q (in one zeta variable); 1/f = (1/D) q^{-1}
  FracSeries f = FracSeries::monomial(
      24, PoleFraction(pole_basis(1, 0)), 120);
  FracSeries inv = f.inverse();
  CHECK(inv.valuation24() == -24);
  CHECK(inv.get(-24).pole_orders() == std::vector<int>{1});
  CHECK((f * inv).get(0) ==
        PoleFraction::constant(1, Rational(1)));
}

TEST_CASE("bivariate series arithmetic") {
  // x = q1 + q2 as a series in q1 with coefficients series in q2
  BiQSeries x(0, 72);
  RatSeries q2 = RatSeries::monomial(24, Rational(1), 72);
  x.set(0, q2);
  x.set(24, RatSeries::monomial(0, Rational(1), 72));
  BiQSeries sq = x * x;
  CHECK(sq.get(0) == RatSeries::monomial(48, Rational(1), 96));
  CHECK(sq.get(24).get(24) == Rational(2));
  CHECK(sq.get(48).get(0) == Rational(1));
}

TEST_CASE("equality reads zeros outside stored windows") {
  RatSeries a(0, 120);
  a.set(48, Rational(5));
  RatSeries b(-24, 120);
  b.set(48, Rational(5));
  b.set(-24, Rational(0));
  CHECK(a == b);
  b.add_at(24, Rational(1));
  CHECK(a != b);
}
