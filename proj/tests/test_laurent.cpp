#include "doctest.h"

#include "core/laurent.hpp"
#include "core/polefrac.hpp"

using namespace omf;

namespace {

LaurentPoly zeta(int nvars, int i, int doubled) {
  return LaurentPoly::monomial(nvars, i, doubled);
}

}  // namespace

TEST_CASE("binomial expansion in two variables") {
  // (z1 + z2^{-1})^3 = z1^3 + 3 z1^2 z2^{-1} + 3 z1 z2^{-2} + z2^{-3}
  LaurentPoly b = zeta(2, 0, 2) + zeta(2, 1, -2);
  LaurentPoly p = b * b * b;
  CHECK(p.term_count() == 4);
  CHECK(p.coeff({6, 0}) == Rational(1));
  CHECK(p.coeff({4, -2}) == Rational(3));
  CHECK(p.coeff({2, -4}) == Rational(3));
  CHECK(p.coeff({0, -6}) == Rational(1));
}

TEST_CASE("half-integer exponents multiply correctly") {
  // z^(1/2) * z^(1/2) = z; z^(1/2) * z^(-1/2) = 1
  LaurentPoly h = zeta(1, 0, 1);
  LaurentPoly hm = zeta(1, 0, -1);
  CHECK((h * h).coeff({2}) == Rational(1));
  CHECK((h * hm) == LaurentPoly::constant(1, Rational(1)));
  CHECK(h.all_even() == false);
  CHECK((h * h).all_even() == true);
}

TEST_CASE("constants broadcast across arities") {
  LaurentPoly one = LaurentPoly::constant(0, Rational(1));
  LaurentPoly p = zeta(3, 1, 2);
  CHECK((one * p) == p);
  CHECK((p + one).coeff({0, 0, 0}) == Rational(1));
  CHECK((p - p) == LaurentPoly(3));
  CHECK(LaurentPoly(0) + p == p);
}

TEST_CASE("substitute_one and symmetrize") {
  // p = z1 z2 + z1^{-1}: at z2 = 1 this is z1 + z1^{-1}
  LaurentPoly p = zeta(2, 0, 2) * zeta(2, 1, 2) + zeta(2, 0, -2);
  LaurentPoly s = p.substitute_one(1);
  CHECK(s.nvars() == 1);
  CHECK(s.coeff({2}) == Rational(1));
  CHECK(s.coeff({-2}) == Rational(1));
  // symmetrize sends z1 z2 -> z^2 and z1^{-1} -> z^{-1}
  LaurentPoly y = p.symmetrize();
  CHECK(y.coeff({4}) == Rational(1));
  CHECK(y.coeff({-2}) == Rational(1));
}

TEST_CASE("invert_var, permute, compose_monomial") {
  LaurentPoly p = zeta(2, 0, 2) + zeta(2, 1, -2) * Rational(5);
  LaurentPoly q = p.invert_var(0);
  CHECK(q.coeff({-2, 0}) == Rational(1));
  int perm[2] = {1, 0};
  LaurentPoly r = p.permute(perm);
  CHECK(r.coeff({0, 2}) == Rational(1));
  CHECK(r.coeff({-2, 0}) == Rational(5));

  // zeta -> z1 z2^{-2} applied to zeta + zeta^{-1}
  LaurentPoly one_var = zeta(1, 0, 2) + zeta(1, 0, -2);
  int image[2] = {1, -2};
  LaurentPoly c = LaurentPoly::compose_monomial(one_var, 2, image);
  CHECK(c.coeff({2, -4}) == Rational(1));
  CHECK(c.coeff({-2, 4}) == Rational(1));
}

TEST_CASE("theta operator is zeta d/dzeta") {
  // theta(z^3 + 4 z^{-1/2}) = 3 z^3 - 2 z^{-1/2}
  LaurentPoly p = zeta(1, 0, 6) + zeta(1, 0, -1) * Rational(4);
  LaurentPoly d = p.theta_op(0);
  CHECK(d.coeff({6}) == Rational(3));
  CHECK(d.coeff({-1}) == Rational(-2));
}

TEST_CASE("exact division by the pole basis") {
  LaurentPoly d = pole_basis(1, 0);
  LaurentPoly quot;
  // D * (z + 3) is divisible with quotient z + 3
  LaurentPoly p = d * (zeta(1, 0, 2) + LaurentPoly::constant(1, Rational(3)));
  CHECK(divide_by_pole_basis(p, 0, quot));
  CHECK(quot.coeff({2}) == Rational(1));
  CHECK(quot.coeff({0}) == Rational(3));
  // D^2 / D = D
  CHECK(divide_by_pole_basis(d * d, 0, quot));
  CHECK(quot == d);
  // z + 1 is not divisible by D
  LaurentPoly bad = zeta(1, 0, 2) + LaurentPoly::constant(1, Rational(1));
  CHECK(!divide_by_pole_basis(bad, 0, quot));
}

TEST_CASE("multi-variable pole division only touches its variable") {
  LaurentPoly d0 = pole_basis(2, 0);
  LaurentPoly p = d0 * (zeta(2, 1, 2) + zeta(2, 1, -2));
  LaurentPoly quot;
  CHECK(divide_by_pole_basis(p, 0, quot));
  CHECK(quot.coeff({0, 2}) == Rational(1));
  CHECK(!divide_by_pole_basis(p, 1, quot));
}

TEST_CASE("pole-fraction arithmetic reduces automatically") {
  int nv = 1;
  LaurentPoly d = pole_basis(nv, 0);
  PoleFraction invd(LaurentPoly::constant(nv, Rational(1)), {1});  // 1/D
  // (1/D) * D = 1
  PoleFraction prod = invd * PoleFraction(d);
  CHECK(prod.is_polynomial());
  CHECK(prod.as_poly() == LaurentPoly::constant(nv, Rational(1)));
  // 12 * (1/12 + 1/D) * D = zeta + 10 + zeta^{-1}
  LaurentPoly n0 = d * Rational(1, 12) + LaurentPoly::constant(nv, Rational(1));
  PoleFraction w0(n0, {1});
  PoleFraction lhs = w0 * PoleFraction(d * Rational(12));
  LaurentPoly expect = zeta(nv, 0, 2) +
                       LaurentPoly::constant(nv, Rational(10)) +
                       zeta(nv, 0, -2);
  CHECK(lhs.as_poly() == expect);
}

TEST_CASE("pole-fraction addition over a common denominator") {
  LaurentPoly d = pole_basis(1, 0);
  PoleFraction invd(LaurentPoly::constant(1, Rational(1)), {1});
  PoleFraction one = PoleFraction::constant(1, Rational(1));
  // 1/D + 1 has numerator 1 + D over D
  PoleFraction s = invd + one;
  CHECK(s.pole_orders() == std::vector<int>{1});
  CHECK(s.num() == d + LaurentPoly::constant(1, Rational(1)));
  // subtracting back recovers 1/D, and x - x = 0
  CHECK((s - one) == invd);
  CHECK((s - s).is_zero());
}

TEST_CASE("pole-fraction inverse on monomial-times-basis shapes") {
  LaurentPoly d = pole_basis(1, 0);
  // f = 2 z D has inverse (1/2) z^{-1} / D
  PoleFraction f(zeta(1, 0, 2) * d * Rational(2));
  PoleFraction g = f.inverse();
  PoleFraction prod = f * g;
  CHECK(prod.as_poly() == LaurentPoly::constant(1, Rational(1)));
  // 1/D inverts back to D
  PoleFraction invd(LaurentPoly::constant(1, Rational(1)), {1});
  CHECK(invd.inverse().as_poly() == d);
  // a sum like z + 1 has no inverse in this ring
  PoleFraction bad(zeta(1, 0, 2) + LaurentPoly::constant(1, Rational(1)));
  CHECK_THROWS(bad.inverse());
}

TEST_CASE("pole-fraction theta operator satisfies the Leibniz rule") {
  LaurentPoly d = pole_basis(1, 0);
  PoleFraction invd(LaurentPoly::constant(1, Rational(1)), {1});
  PoleFraction df = PoleFraction(d).theta_op(0);
  PoleFraction dg = invd.theta_op(0);
  // theta(D * 1/D) = theta(1) = 0
  PoleFraction total = df * invd + PoleFraction(d) * dg;
  CHECK(total.is_zero());
}

TEST_CASE("pole-fraction symmetrize collapses variables and poles") {
  // 1/(D1 D2) -> 1/D^2
  PoleFraction f(LaurentPoly::constant(2, Rational(1)), {1, 1});
  PoleFraction s = f.symmetrize();
  CHECK(s.nvars() == 1);
  CHECK(s.pole_orders() == std::vector<int>{2});
}
