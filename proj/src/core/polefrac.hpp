#pragma once

// Fractions whose denominators are products of the fixed pole basis
// D_i = zeta_i - 2 + zeta_i^{-1}. This is exactly the denominator shape of
// Weierstrass-p layers and their zeta-derivatives, so the reduction rule
// (divide out D_i while the numerator allows) keeps everything canonical.

#include <algorithm>
#include <vector>

#include "core/laurent.hpp"

namespace omf {

class PoleFraction {
 public:
  PoleFraction() = default;
  explicit PoleFraction(LaurentPoly num)
      : num_(std::move(num)), pole_(num_.nvars(), 0) {}
  PoleFraction(LaurentPoly num, std::vector<int> pole_orders);

  static PoleFraction zero(int nvars) {
    return PoleFraction(LaurentPoly(nvars));
  }
  static PoleFraction constant(int nvars, Rational c) {
    return PoleFraction(LaurentPoly::constant(nvars, std::move(c)));
  }

  const LaurentPoly& num() const { return num_; }
  const std::vector<int>& pole_orders() const { return pole_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  // Throws unless all pole orders are zero.
  const LaurentPoly& as_poly() const;

  PoleFraction& operator+=(const PoleFraction& o);
  PoleFraction& operator-=(const PoleFraction& o);
  friend PoleFraction operator+(PoleFraction a, const PoleFraction& b) {
    a += b;
    return a;
  }
  friend PoleFraction operator-(PoleFraction a, const PoleFraction& b) {
    a -= b;
    return a;
  }
  friend PoleFraction operator*(const PoleFraction& a, const PoleFraction& b);
  PoleFraction operator-() const;
  PoleFraction& operator*=(const Rational& s) {
    num_ *= s;
    if (num_.is_zero()) std::fill(pole_.begin(), pole_.end(), 0);
    return *this;
  }
  friend PoleFraction operator*(PoleFraction a, const Rational& s) {
    a *= s;
    return a;
  }
  bool operator==(const PoleFraction& o) const;
  bool operator!=(const PoleFraction& o) const { return !(*this == o); }

  // Multiplicative inverse; defined only when the numerator is a monomial
  // times a product of pole-basis factors. Throws otherwise.
  PoleFraction inverse() const;

  // Rewrite into an nvars-variable ring (only zeros and constants can move).
  PoleFraction promoted(int nvars) const;
  // Send a one-variable fraction's zeta to zeta_i in an nvars-variable ring.
  PoleFraction embed(int nvars, int i) const;

  // zeta_i = 1; rejected if the fraction has a pole in variable i.
  PoleFraction substitute_one(int i) const;
  // All variables to a single zeta; pole orders collapse additively.
  PoleFraction symmetrize() const;
  PoleFraction invert_var(int i) const;
  PoleFraction permute(std::span<const int> perm) const;
  // zeta_i d/dzeta_i via the quotient rule; raises the pole order in i.
  PoleFraction theta_op(int i) const;

 private:
  LaurentPoly num_;
  std::vector<int> pole_;

  void reduce();
};

}  // namespace omf
