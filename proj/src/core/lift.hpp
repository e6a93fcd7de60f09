#pragma once

// Fourier-Jacobi machinery: arithmetic on s-expansions whose layers are
// Jacobi forms, the Gritsenko lift, theta blocks, Borcherds products (both
// with elliptic variables and the rank-0 bivariate case), and divisor
// orders along rational quadratic divisors.

#include <span>
#include <vector>

#include "core/jacobi.hpp"

namespace omf {

// f(Z) = sum_m layers[m] s^m with s = e^{2 pi i w}; layer m is a Jacobi
// series of index_scale m sharing the common weight.
struct FJSeries {
  int weight = 0;
  int nvars = 0;
  long s_prec = 0;  // exclusive
  std::vector<JacobiSeries> layers;

  const JacobiSeries* layer(long m) const {
    if (m < 0 || m >= static_cast<long>(layers.size())) return nullptr;
    return &layers[m];
  }
  bool is_zero() const;
  // First index with a nonzero layer; s_prec when none.
  long s_valuation() const;
};

FJSeries fj_add(const FJSeries& a, const FJSeries& b);
FJSeries fj_sub(const FJSeries& a, const FJSeries& b);
FJSeries fj_mul(const FJSeries& a, const FJSeries& b);
FJSeries fj_scale(const FJSeries& a, const Rational& s);
bool fj_equal(const FJSeries& a, const FJSeries& b);

// G(phi) = sum_{m >= 0} (phi|V_m) s^m. Weight >= 1; when every c(0, r)
// vanishes the boundary layer is zero without parity conditions.
FJSeries gritsenko_lift(const JacobiSeries& phi, long s_prec);

// eta^{c(0,0)} prod_{r > 0} (theta_11(<r, z>) / eta)^{c(0,r)} for integral
// q^0 data; negative exponents need even c(0,r) on unit vectors r.
PolySeries theta_block(const JacobiSeries& phi, long prec24);

// C = (1 / nvars) sum_r c(0, r) <r, r> / 2 with <r, r> / 2 = sum r_i^2 / 4.
Rational borcherds_constant(const JacobiSeries& phi);

// B(phi) = Theta_phi s^C exp(-sum_{m >= 1} (phi|V_m) s^m) for a weight-0
// form with integral coefficients and integral C; declared weight c(0,0)/2.
FJSeries borcherds_lift(const JacobiSeries& phi, long s_prec);

// No elliptic variables: q1^{rho1} q2^{rho2} times the double product
// prod (1 - q1^m q2^n)^{c(mn)} over m > 0, n in Z and m = 0, n > 0, where
// rho2 = c(0)/24 and rho1 = rho2 - sum_{n>0} n c(-n). Bi-truncation is
// exclusive in integer orders of (q1, q2).
BiQSeries borcherds_rank0(const RatSeries& psi, long q1_orders,
                          long q2_orders);

// ord(Psi; r^perp) = sum_{lambda >= 1} c(lambda^2 n0, lambda r_k); r_k in
// integer units. Throws when truncation cannot bound the sum.
long divisor_order(const JacobiSeries& phi, long n0, std::span<const int> r_k);

// f(q1) x 1 and 1 x f(q2) in the bivariate ring.
BiQSeries tensor_left(const RatSeries& f);
BiQSeries tensor_right(const RatSeries& f);

}  // namespace omf
