#include <doctest.h>

#include "core/sympoly.hpp"

using namespace omf;

TEST_CASE("formal polynomial arithmetic and division") {
  FormalPoly x = FormalPoly::variable(2, 0);
  FormalPoly y = FormalPoly::variable(2, 1);
  FormalPoly p = (x + y).pow(3);
  CHECK(p.coeff({2, 1}) == Rational(3));
  CHECK((p - p).is_zero());

  FormalPoly q, r;
  divide_rem(p, x + y, q, r);
  CHECK(r.is_zero());
  CHECK(q == (x + y).pow(2));

  divide_rem(x * x + y, x + y, q, r);
  CHECK(q * (x + y) + r == x * x + y);
  CHECK_FALSE(r.is_zero());

  CHECK(divide_exact(x * x - y * y, x - y) == x + y);
  CHECK_THROWS_AS(divide_exact(x * x + FormalPoly(2, Rational(1)), x),
                  std::domain_error);
}

TEST_CASE("small discriminants in closed form") {
  // One symbol pair (p, q) per classical formula.
  FormalPoly p = FormalPoly::variable(2, 0);
  FormalPoly q = FormalPoly::variable(2, 1);
  FormalPoly one(2, Rational(1));
  TPoly quad = {q, p, one};
  CHECK(discriminant(quad) == p * p - q * Rational(4));
  TPoly cubic = {q, p, FormalPoly(2), one};
  CHECK(discriminant(cubic) ==
        -(p.pow(3) * Rational(4) + q.pow(2) * Rational(27)));
}

TEST_CASE("resultant detects common roots") {
  FormalPoly a = FormalPoly::variable(1, 0);
  FormalPoly one(1, Rational(1));
  // (t - a)(t + 1) and (t - a)(t + 2) share the root a.
  TPoly f = tp_mul({-a, one}, {one, one});
  TPoly g = tp_mul({-a, one}, {one + one, one});
  CHECK(resultant(f, g).is_zero());
  CHECK_FALSE(resultant({-a, one}, {one, one}).is_zero());
}

TEST_CASE("discriminant factorization suite") {
  VerifyReport rep = verify_discriminant_factorizations();
  for (const auto& c : rep.checks) {
    INFO(c.label, ": ", c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("quintic symmetric function suite") {
  VerifyReport rep = verify_table7_symmetric();
  for (const auto& c : rep.checks) {
    INFO(c.label, ": ", c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("substitution algebra suite") {
  VerifyReport rep = verify_substitution_algebra();
  for (const auto& c : rep.checks) {
    INFO(c.label, ": ", c.detail);
    CHECK(c.pass);
  }
}
