#include "doctest.h"

#include "core/classical.hpp"

using namespace omf;

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(8) == Rational(-1, 30));
  CHECK(bernoulli(10) == Rational(5, 66));
  CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("Eisenstein series coefficients") {
  RatSeries e2 = eisenstein(2, 24 * 6);
  CHECK(e2.get(0) == Rational(1));
  CHECK(e2.get(24) == Rational(-24));
  CHECK(e2.get(48) == Rational(-72));
  CHECK(e2.get(72) == Rational(-96));
  CHECK(e2.get(96) == Rational(-168));

  RatSeries e4 = eisenstein(4, 24 * 6);
  CHECK(e4.get(24) == Rational(240));
  CHECK(e4.get(48) == Rational(2160));
  CHECK(e4.get(72) == Rational(6720));
  CHECK(e4.get(96) == Rational(17520));
  CHECK(e4.get(120) == Rational(30240));

  RatSeries e6 = eisenstein(6, 24 * 5);
  CHECK(e6.get(24) == Rational(-504));
  CHECK(e6.get(48) == Rational(-16632));
  CHECK(e6.get(72) == Rational(-122976));
  CHECK(e6.get(96) == Rational(-532728));

  RatSeries e12 = eisenstein(12, 24 * 3);
  CHECK(e12.get(24) == Rational(65520, 691));
}

TEST_CASE("level-2 Eisenstein combination") {
  // 2 E2(2 tau) - E2(tau) = 1 + 24 q + 24 q^2 + 96 q^3 + 24 q^4 + ...
  long p = 24 * 5;
  RatSeries f = eisenstein(2, p).scale_variable(2).truncate(p) * Rational(2) -
                eisenstein(2, p);
  CHECK(f.get(0) == Rational(1));
  CHECK(f.get(24) == Rational(24));
  CHECK(f.get(48) == Rational(24));
  CHECK(f.get(72) == Rational(96));
  CHECK(f.get(96) == Rational(24));
}

TEST_CASE("eta, delta and Ramanujan tau") {
  RatSeries eta = dedekind_eta(24 * 8);
  CHECK(eta.get(1) == Rational(1));
  CHECK(eta.get(25) == Rational(-1));   // q^{25/24} = q^{1/24} q
  CHECK(eta.get(49) == Rational(-1));
  CHECK(eta.get(121) == Rational(1));   // pentagonal n = 5

  RatSeries delta = delta_series(24 * 8);
  CHECK(delta.valuation24() == 24);
  CHECK(delta.get(24) == Rational(1));
  CHECK(delta.get(48) == Rational(-24));
  CHECK(delta.get(72) == Rational(252));
  CHECK(delta.get(96) == Rational(-1472));
  CHECK(delta.get(120) == Rational(4830));
  CHECK(delta.get(144) == Rational(-6048));
  CHECK(delta.get(168) == Rational(-16744));

  // E4^3 - E6^2 = 1728 delta
  long p = 24 * 8;
  RatSeries lhs = eisenstein(4, p).pow(3) - eisenstein(6, p).pow(2);
  CHECK(lhs == delta * Rational(1728));
}

TEST_CASE("j-invariant expansion") {
  RatSeries j = j_invariant(24 * 4);
  CHECK(j.valuation24() == -24);
  CHECK(j.get(-24) == Rational(1));
  CHECK(j.get(0) == Rational(744));
  CHECK(j.get(24) == Rational(196884));
  CHECK(j.get(48) == Rational(21493760));
  CHECK(j.get(72) == Rational(864299970));
}

TEST_CASE("theta constants and the Jacobi identity") {
  long p = 24 * 6;
  RatSeries t00 = theta_null(Theta::k00, p);
  RatSeries t01 = theta_null(Theta::k01, p);
  RatSeries t10 = theta_null(Theta::k10, p);
  CHECK(t00.get(0) == Rational(1));
  CHECK(t00.get(12) == Rational(2));    // q^{1/2}
  CHECK(t00.get(48) == Rational(2));    // q^2
  CHECK(t01.get(12) == Rational(-2));
  CHECK(t10.valuation24() == 3);        // q^{1/8}
  CHECK(t10.get(3) == Rational(2));
  CHECK(t10.get(27) == Rational(2));    // q^{9/8}
  CHECK(theta_null(Theta::k11, p).is_zero());

  CHECK(t00.pow(4) == t01.pow(4) + t10.pow(4));
  // theta_00 theta_01 theta_10 = 2 eta^3
  CHECK(t00 * t01 * t10 == dedekind_eta(p).pow(3) * Rational(2));
}

TEST_CASE("theta_11 leading behaviour") {
  PolySeries t11 = theta_series(Theta::k11, 24 * 4);
  CHECK(t11.valuation24() == 3);
  LaurentPoly lead = t11.get(3);
  CHECK(lead.coeff({1}) == Rational(1));
  CHECK(lead.coeff({-1}) == Rational(-1));
  // theta_11 is odd under zeta -> 1/zeta
  t11.for_each([](long, const LaurentPoly& c) {
    CHECK(c.invert_var(0) == -c);
  });
}

TEST_CASE("Weierstrass layer") {
  FracSeries w = wp_series(24 * 4);
  // q^0 coefficient times 12 D equals zeta + 10 + 1/zeta
  PoleFraction w0 = w.get(0);
  LaurentPoly d = pole_basis(1, 0);
  LaurentPoly expect = LaurentPoly::monomial(1, 0, 2) +
                       LaurentPoly::constant(1, Rational(10)) +
                       LaurentPoly::monomial(1, 0, -2);
  CHECK((w0 * PoleFraction(d * Rational(12))).as_poly() == expect);
  // q^1 coefficient is exactly D
  CHECK(w.get(24) == PoleFraction(d));
  // q^2: divisors 1 and 2 give 2 z^2 + z - 6 + 1/z + 2/z^2
  PoleFraction c2 = w.get(48);
  CHECK(c2.is_polynomial());
  CHECK(c2.as_poly().coeff({4}) == Rational(2));
  CHECK(c2.as_poly().coeff({2}) == Rational(1));
  CHECK(c2.as_poly().coeff({0}) == Rational(-6));

  // first derivative layer kills the constant and differentiates D
  FracSeries w1 = wp_layer(1, 24 * 3);
  LaurentPoly dp = LaurentPoly::monomial(1, 0, 2) -
                   LaurentPoly::monomial(1, 0, -2);
  CHECK(w1.get(24) == PoleFraction(dp));
}
