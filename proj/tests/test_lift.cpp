#include <vector>

#include "core/lift.hpp"
#include "doctest.h"

using namespace omf;

namespace {

JacobiSeries delta_times(const JacobiSeries& f, long prec24) {
  JacobiSeries out = f;
  out.weight += 12;
  out.data = promote_scalar<PoleFraction>(delta_series(prec24)) * f.data;
  out.data = out.data.truncate(prec24);
  return out;
}

PolySeries poly_data(const JacobiSeries& f) {
  return f.data.map([](const PoleFraction& c) { return c.as_poly(); });
}

}  // namespace

TEST_CASE("Gritsenko lift layers") {
  long p = 24 * 13;
  JacobiSeries chi10_seed = delta_times(phi_basic(-2, p), p);
  FJSeries chi10 = gritsenko_lift(chi10_seed, 4);
  CHECK(chi10.weight == 10);
  CHECK(chi10.layers[0].is_zero());
  CHECK(jac_equal(chi10.layers[1], chi10_seed));
  CHECK(chi10.s_valuation() == 1);

  JacobiSeries phim = phi_basic(-2, p);
  JacobiSeries phi0 = phi_basic(0, p);
  JacobiSeries e41{4, 1, 1,
                   ((promote_scalar<PoleFraction>(eisenstein(4, p)) *
                     phi0.data) -
                    (promote_scalar<PoleFraction>(eisenstein(6, p)) *
                     phim.data)) *
                       rat(1, 12)};
  FJSeries g = gritsenko_lift(e41, 3);
  CHECK(jac_equal(g.layers[1], e41));
  FracSeries expect0 =
      promote_scalar<PoleFraction>(eisenstein(4, p) * rat(1, 240));
  CHECK(g.layers[0].data == expect0);
}

TEST_CASE("theta blocks") {
  long p = 24 * 7;
  SUBCASE("pure eta power gives the discriminant") {
    JacobiSeries f{0, 1, 1,
                   FracSeries::monomial(
                       0, PoleFraction::constant(1, Rational(24)), p)};
    PolySeries block = theta_block(f, p);
    CHECK(block == promote_scalar<LaurentPoly>(delta_series(p)));
  }
  SUBCASE("the n = 1 weak form gives Delta phi_{-2,1}") {
    PolySeries block = theta_block(psi_n(1, p), p);
    CHECK(block == poly_data(delta_times(phi_basic(-2, p), p)));
  }
  SUBCASE("leading exponent is the q^0 coefficient sum over 24") {
    PolySeries block = theta_block(psi_n(2, 96), 96);
    CHECK(block.valuation24() == 24);  // (16 + 4 * 2) / 24 in q-orders: 1
  }
}

TEST_CASE("Borcherds constant") {
  CHECK(borcherds_constant(psi_n(1, 48)) == Rational(1));
  CHECK(borcherds_constant(psi_n(2, 48)) == Rational(1));
}

TEST_CASE("Borcherds products match Gritsenko lifts of cusp forms") {
  SUBCASE("one variable") {
    long p = 24 * 13;
    FJSeries b = borcherds_lift(psi_n(1, p), 4);
    FJSeries g = gritsenko_lift(delta_times(phi_basic(-2, p), p), 4);
    CHECK(b.weight == 10);
    CHECK(fj_equal(b, g));
  }
  SUBCASE("two variables") {
    long p = 24 * 10;
    FJSeries b = borcherds_lift(psi_n(2, p), 4);
    FJSeries g = gritsenko_lift(delta_times(fk_symmetric(2, 2, p), p), 4);
    CHECK(b.weight == 8);
    CHECK(fj_equal(b, g));
  }
}

TEST_CASE("divisor orders") {
  std::vector<int> r{1};
  CHECK(divisor_order(psi_n(1, 72), 0, r) == 2);
  JacobiSeries phim = phi_basic(-2, 72);
  JacobiSeries e41{4, 1, 1,
                   ((promote_scalar<PoleFraction>(eisenstein(4, 72)) *
                     phi_basic(0, 72).data) -
                    (promote_scalar<PoleFraction>(eisenstein(6, 72)) *
                     phim.data)) *
                       rat(1, 12)};
  CHECK(divisor_order(e41, 0, r) == 0);
  std::vector<int> r2{1, 0};
  CHECK(divisor_order(psi_n(2, 72), 0, r2) == 2);
}

TEST_CASE("bivariate products without elliptic variables") {
  SUBCASE("denominator identity for j - 744") {
    long p = 24 * 45;
    RatSeries psi = j_invariant(p) - RatSeries::monomial(0, Rational(744),
                                                         RatSeries::kInfPrec);
    BiQSeries f = borcherds_rank0(psi, 5, 5);
    long tp = 24 * 8;
    RatSeries j = j_invariant(tp);
    BiQSeries target = tensor_left(j) - tensor_right(j);
    CHECK(f == target);
  }
  SUBCASE("2j - 1440 gives the square of the discriminant kernel") {
    long p = 24 * 45;
    RatSeries psi = j_invariant(p) * Rational(2) -
                    RatSeries::monomial(0, Rational(1440), RatSeries::kInfPrec);
    BiQSeries f = borcherds_rank0(psi, 5, 5);
    long tp = 24 * 10;
    RatSeries j = j_invariant(tp);
    RatSeries d2 = delta_series(tp).pow(2);
    BiQSeries jdiff = tensor_left(j) - tensor_right(j);
    BiQSeries target =
        tensor_left(d2) * tensor_right(d2) * jdiff * jdiff;
    CHECK(f == target);
  }
}
