#pragma once

// Exact polynomial algebra over named formal symbols: resultants and
// discriminants through fraction-free elimination, symmetric-function
// identities, and the coordinate changes between the two presentations of
// the quintic Weierstrass family. Exponents may be negative, so inverted
// symbols (1/b2, 1/c_{-2}) are ordinary terms.

#include <string>
#include <vector>

#include "core/vgs.hpp"

namespace omf {

// Sparse Laurent polynomial in a fixed number of formal symbols. Terms are
// kept in lexicographic order of the exponent vector with no zero
// coefficients, so equality is structural.
class FormalPoly {
 public:
  FormalPoly() = default;
  explicit FormalPoly(int nvars) : nvars_(nvars) {}
  FormalPoly(int nvars, const Rational& c);

  static FormalPoly variable(int nvars, int i, int power = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  void add_term(std::vector<int> exps, const Rational& c);
  const Rational& coeff(const std::vector<int>& exps) const;

  FormalPoly operator-() const;
  FormalPoly& operator+=(const FormalPoly& o);
  FormalPoly& operator-=(const FormalPoly& o);

  friend FormalPoly operator+(FormalPoly a, const FormalPoly& b);
  friend FormalPoly operator-(FormalPoly a, const FormalPoly& b);
  friend FormalPoly operator*(const FormalPoly& a, const FormalPoly& b);
  friend FormalPoly operator*(const FormalPoly& a, const Rational& c);
  friend bool operator==(const FormalPoly& a, const FormalPoly& b);

  FormalPoly pow(int e) const;  // e >= 0

 private:
  int nvars_ = 0;
  std::map<std::vector<int>, Rational> terms_;
};

// Division with remainder in lexicographic order. The divisor must have no
// negative exponents; the quotient collects every term whose leading
// monomial is divisible, the remainder the rest.
void divide_rem(const FormalPoly& a, const FormalPoly& b, FormalPoly& quot,
                FormalPoly& rem);

// Division known to be exact; throws std::domain_error on a remainder.
FormalPoly divide_exact(const FormalPoly& a, const FormalPoly& b);

// Dense polynomial in one distinguished variable t with FormalPoly
// coefficients, coeffs[k] against t^k.
using TPoly = std::vector<FormalPoly>;

TPoly tp_add(const TPoly& a, const TPoly& b);
TPoly tp_mul(const TPoly& a, const TPoly& b);
TPoly tp_derivative(const TPoly& a);
FormalPoly tp_eval(const TPoly& a, const FormalPoly& x);
// a(s t + r) expanded by Horner; s and r may be Laurent.
TPoly tp_compose_affine(const TPoly& a, const FormalPoly& s,
                        const FormalPoly& r);

// Sylvester resultant by fraction-free Bareiss elimination. Both leading
// coefficients must be nonzero.
FormalPoly resultant(const TPoly& p, const TPoly& q);

// (-1)^{d(d-1)/2} res(p, p') / lc(p); requires lc(p) to divide exactly,
// which holds whenever lc is a monomial (all uses here are monic).
FormalPoly discriminant(const TPoly& p);

// The discriminant factorizations of the one-parameter Weierstrass
// families (t^3 + a4 t + a6)^2 - 4 b (t - beta)^m: the closed degree-24
// form at m = 0, the printed sextic at m = 3, and exact divisibility by
// b^3 (beta^3 + a4 beta + a6)^m with sharp exponents for m = 3, 4, 5.
VerifyReport verify_discriminant_factorizations();

// The printed d-coefficients of the monic quintic with roots
// g_i - (1/5) sum g_j, rewritten in power sums by Newton's identities.
VerifyReport verify_table7_symmetric();

// The base change between the quintic presentations: the printed cubic
// expansion of b2^2 A(T/b2 - (a4+b4)/(5 b2)), the Weierstrass relations
// recovered from the two-torsion form, and the printed coefficient
// dictionary between the (a, b) and (c, d) presentations.
VerifyReport verify_substitution_algebra();

}  // namespace omf
