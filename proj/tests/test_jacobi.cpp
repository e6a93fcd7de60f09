#include <vector>

#include "core/jacobi.hpp"
#include "doctest.h"

using namespace omf;

namespace {

// One-variable Laurent polynomial from (exponent, coefficient) pairs;
// exponents here are true integers, doubled internally.
LaurentPoly zpoly(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPoly p(1);
  for (const auto& [e, c] : terms) {
    int ee[1] = {2 * e};
    p.add_term(ee, Rational(c));
  }
  return p;
}

JacobiSeries scalar_jacobi(const RatSeries& s, int weight) {
  return {weight, 0, 1, promote_scalar<PoleFraction>(s)};
}

JacobiSeries eisenstein_jacobi_41(long prec24) {
  JacobiSeries phim = phi_basic(-2, prec24);
  JacobiSeries phi0 = phi_basic(0, prec24);
  FracSeries data = (promote_scalar<PoleFraction>(eisenstein(4, prec24)) *
                         phi0.data -
                     promote_scalar<PoleFraction>(eisenstein(6, prec24)) *
                         phim.data) *
                    rat(1, 12);
  return {4, 1, 1, data.truncate(prec24)};
}

}  // namespace

TEST_CASE("weight -2 and 0 index 1 generators") {
  JacobiSeries phim = phi_basic(-2, 96);
  CHECK(phim.weight == -2);
  CHECK(phim.q0() == zpoly({{1, 1}, {0, -2}, {-1, 1}}));
  CHECK(phim.data.peek(24)->as_poly() ==
        zpoly({{2, -2}, {1, 8}, {0, -12}, {-1, 8}, {-2, -2}}));

  JacobiSeries phi0 = phi_basic(0, 96);
  CHECK(phi0.weight == 0);
  CHECK(phi0.q0() == zpoly({{1, 1}, {0, 10}, {-1, 1}}));
  CHECK(phi0.data.peek(24)->as_poly() ==
        zpoly({{2, 10}, {1, -64}, {0, 108}, {-1, -64}, {-2, 10}}));

  CHECK(elliptic_invariant(phim));
  CHECK(elliptic_invariant(phi0));
}

TEST_CASE("index 1 Eisenstein series from the two generators") {
  JacobiSeries e41 = eisenstein_jacobi_41(120);
  CHECK(e41.q0() == zpoly({{0, 1}}));
  CHECK(e41.data.peek(24)->as_poly() ==
        zpoly({{2, 1}, {1, 56}, {0, 126}, {-1, 56}, {-2, 1}}));
  CHECK(elliptic_invariant(e41));

  SingularReport rep = classify(e41);
  CHECK(rep.is_weak);
  CHECK(rep.is_holomorphic);
  CHECK(!rep.is_cusp);
  CHECK(rep.entries.empty());
}

TEST_CASE("holomorphy classification sees singular support") {
  SingularReport rep = classify(phi_basic(-2, 48));
  CHECK(rep.is_weak);
  CHECK(!rep.is_holomorphic);
  REQUIRE(rep.entries.size() == 2);
  CHECK(rep.entries[0].n_exp == 0);
  CHECK(rep.entries[0].norm == rat(-1, 4));
  CHECK(rep.entries[0].coeff == Rational(1));

  SingularReport cusp = classify(scalar_jacobi(delta_series(96), 12));
  CHECK(cusp.is_weak);
  CHECK(cusp.is_cusp);
}

TEST_CASE("theta-quotient weak forms") {
  JacobiSeries psi1 = psi_n(1, 96);
  JacobiSeries phi0 = phi_basic(0, 96);
  CHECK(jac_equal(psi1, jac_scale(phi0, Rational(2))));

  JacobiSeries psi2 = psi_n(2, 72);
  CHECK(psi2.weight == 0);
  CHECK(psi2.nvars == 2);
  CHECK(psi2.q0().coeff({0, 0}) == Rational(16));
  CHECK(psi2.q0().coeff({2, 0}) == Rational(2));
  CHECK(psi2.q0().coeff({0, -2}) == Rational(2));
  CHECK(elliptic_invariant(psi2));

  JacobiSeries psi3 = psi_n(3, 48);
  CHECK(psi3.q0().coeff({0, 0, 0}) == Rational(12));
  CHECK(psi3.q0().coeff({0, 2, 0}) == Rational(2));

  SUBCASE("setting the last variable to zero peels off one factor") {
    JacobiSeries down = restrict_var(psi2, 1);
    CHECK(jac_equal(down, psi1));
  }
}

TEST_CASE("symmetric generator sums") {
  CHECK(jac_equal(fk_symmetric(1, 0, 72), phi_basic(0, 72)));
  CHECK(jac_equal(fk_symmetric(1, 1, 72), phi_basic(-2, 72)));

  JacobiSeries f = fk_symmetric(2, 1, 48);
  CHECK(f.weight == -2);
  LaurentPoly d1 = pole_basis(2, 0), d2 = pole_basis(2, 1);
  LaurentPoly u1 = LaurentPoly::monomial(2, 0, 2) +
                   LaurentPoly::constant(2, Rational(10)) +
                   LaurentPoly::monomial(2, 0, -2);
  LaurentPoly u2 = LaurentPoly::monomial(2, 1, 2) +
                   LaurentPoly::constant(2, Rational(10)) +
                   LaurentPoly::monomial(2, 1, -2);
  CHECK(f.q0() == d1 * u2 + d2 * u1);
}

TEST_CASE("index-raising operators") {
  SUBCASE("V_1 is the identity") {
    JacobiSeries e41 = eisenstein_jacobi_41(96);
    CHECK(jac_equal(hecke_v(e41, 1), e41));
  }
  SUBCASE("discriminant eigenvalue under V_2") {
    JacobiSeries dlt = scalar_jacobi(delta_series(120), 12);
    JacobiSeries v2 = hecke_v(dlt, 2);
    CHECK(v2.index_scale == 2);
    std::vector<int> none;
    CHECK(v2.data.peek(24)->as_poly().coeff(none) == Rational(-24));
    CHECK(v2.data.peek(48)->as_poly().coeff(none) == Rational(576));
  }
  SUBCASE("V_2 doubles the index; only d = 1 divides n = 1") {
    JacobiSeries e41 = eisenstein_jacobi_41(120);
    JacobiSeries v2 = hecke_v(e41, 2);
    CHECK(v2.index_scale == 2);
    CHECK(v2.data.peek(24)->as_poly() == e41.data.peek(48)->as_poly());
    // n = 2 mixes d = 1 and d = 2: c'(2, r) = c(4, r) + 8 c(1, r/2).
    LaurentPoly expect = e41.data.peek(96)->as_poly() +
                         e41.data.peek(24)->as_poly().stretch(2) * Rational(8);
    CHECK(v2.data.peek(48)->as_poly() == expect);
  }
}

TEST_CASE("boundary layer V_0") {
  SUBCASE("pure Eisenstein part for a one-variable holomorphic form") {
    JacobiSeries e41 = eisenstein_jacobi_41(120);
    JacobiSeries v0 = hecke_v(e41, 0);
    CHECK(v0.index_scale == 0);
    std::vector<int> zero(1, 0);
    CHECK(v0.q0().coeff(zero) == rat(1, 240));
    CHECK(v0.data.peek(24)->as_poly().coeff(zero) == Rational(1));
  }
  SUBCASE("weight 2 picks up a Weierstrass layer and no Eisenstein term") {
    JacobiSeries f = external_product(
        {phi_basic(-2, 96), eisenstein_jacobi_41(96)},
        RatSeries::monomial(0, Rational(1), 96), 0);
    CHECK(f.weight == 2);
    JacobiSeries v0 = hecke_v(f, 0);
    LaurentPoly wnum = pole_basis(2, 0) * rat(1, 12) +
                       LaurentPoly::constant(2, Rational(1));
    PoleFraction w0(wnum, {1, 0});
    CHECK(*v0.data.peek(0) == w0);
    CHECK(v0.data.peek(24)->as_poly() == pole_basis(2, 0));
  }
}

TEST_CASE("exact linear solving") {
  SUBCASE("unique solution") {
    LinearSolution s = solve_exact(
        {{Rational(2), Rational(1)}, {Rational(1), Rational(-1)}},
        {Rational(4), Rational(-1)});
    REQUIRE(s.feasible);
    CHECK(s.particular == std::vector<Rational>{Rational(1), Rational(2)});
    CHECK(s.nullspace.empty());
  }
  SUBCASE("inconsistent system") {
    LinearSolution s = solve_exact(
        {{Rational(1), Rational(1)}, {Rational(2), Rational(2)}},
        {Rational(1), Rational(3)});
    CHECK(!s.feasible);
  }
  SUBCASE("one-dimensional nullspace") {
    LinearSolution s =
        solve_exact({{Rational(1), Rational(2)}}, {Rational(3)});
    REQUIRE(s.feasible);
    REQUIRE(s.nullspace.size() == 1);
    CHECK(s.nullspace[0][0] * Rational(1) + s.nullspace[0][1] * Rational(2) ==
          Rational(0));
  }
}

TEST_CASE("prescribed-coefficient workbench") {
  SUBCASE("weight 2 with one variable is E4 phi_{-2,1}") {
    JacobiConstraints cons;
    cons.c00 = Rational(-2);
    JacobiSolution sol = solve_jacobi(2, 1, cons, 96);
    REQUIRE(sol.feasible);
    CHECK(sol.homogeneous.empty());
    JacobiSeries expect = phi_basic(-2, 96);
    expect.data = promote_scalar<PoleFraction>(eisenstein(4, 96)) *
                  expect.data;
    expect.weight = 2;
    CHECK(jac_equal(sol.particular, expect));
  }
  SUBCASE("weight 2, two variables, q^0 pinned to the first pole basis") {
    JacobiConstraints cons;
    cons.q0 = pole_basis(2, 0);
    JacobiSolution sol = solve_jacobi(2, 2, cons, 96);
    REQUIRE(sol.feasible);
    CHECK(sol.homogeneous.empty());
    JacobiSeries expect = external_product(
        {phi_basic(-2, 96), eisenstein_jacobi_41(96)},
        RatSeries::monomial(0, Rational(1), 96), 0);
    CHECK(jac_equal(sol.particular, expect));
  }
}
