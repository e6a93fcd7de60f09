#include <doctest.h>

#include "core/registry.hpp"

using namespace omf;

TEST_CASE("text rendering conventions") {
  CHECK(render_series(eisenstein(4, 72)) == "1 + 240*q + 2160*q^2 + O(q^3)");
  CHECK(render_series(delta_series(72)) == "q - 24*q^2 + O(q^3)");

  LaurentPoly half = LaurentPoly::monomial(2, 0, 3, rat(1, 2));
  CHECK(render_laurent(half) == "1/2*zeta1^(3/2)");
  LaurentPoly d(1);
  d.add_term(std::vector<int>{-2}, Rational(1));
  d.add_term(std::vector<int>{0}, Rational(-2));
  d.add_term(std::vector<int>{2}, Rational(1));
  CHECK(render_laurent(d) == "zeta1^-1 - 2 + zeta1");

  PoleFraction wp(LaurentPoly::constant(1, Rational(1)), std::vector<int>{1});
  CHECK(render_polefrac(wp) == "(1)/(D1)");
}

TEST_CASE("json round trip is exact") {
  RatSeries e6 = eisenstein(6, 24 * 6);
  Json j = to_json(e6);
  CHECK(to_json(series_from_json(j)) == j);
  CHECK(render_series(series_from_json(j)) == render_series(e6));

  JacobiSeries psi = psi_n(1, 72);
  Json jp = to_json(psi);
  CHECK(to_json(jacobi_from_json(jp)) == jp);
  CHECK(render_jacobi(jacobi_from_json(jp)) == render_jacobi(psi));

  FJSeries chi = fj_truncate(
      gritsenko_lift(JacobiSeries{10, 1, 1,
                                  (promote_scalar<PoleFraction>(
                                       delta_series(72)) *
                                   phi_basic(-2, 72).data)
                                      .truncate(72)},
                     3),
      3);
  Json jf = to_json(chi);
  CHECK(to_json(fj_from_json(jf)) == jf);
  CHECK(render_fj(fj_from_json(jf)) == render_fj(chi));
}

TEST_CASE("registry catalogue") {
  ExpandResult e2 = expand_name("E2.level2.reference", 3, 1);
  CHECK(e2.text == "1 + 24*q + 24*q^2 + 96*q^3 + O(q^4)");

  ExpandResult psi = expand_name("psi.rank17", 1, 1);
  CHECK(psi.text.find("q^-1") != std::string::npos);
  CHECK(psi.text.find("120") != std::string::npos);

  CHECK_THROWS_AS(expand_name("no.such.form", 1, 1), std::invalid_argument);
  CHECK_FALSE(registry_names().empty());
}
