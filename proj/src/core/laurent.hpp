#pragma once

// Sparse exact Laurent polynomials in up to five elliptic variables.
// Exponents live in (1/2)Z and are stored doubled, so every key is an
// integer vector. The doubled exponents are packed into one 64-bit key
// (12 bits per variable, biased) which keeps multiplication loops tight.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace omf {

class LaurentPoly {
 public:
  using Key = std::uint64_t;
  static constexpr int kMaxVars = 5;
  static constexpr int kBits = 12;
  static constexpr int kBias = 1 << (kBits - 1);  // 2048
  static constexpr Key kMask = (Key(1) << kBits) - 1;

  LaurentPoly() : nvars_(0) {}
  explicit LaurentPoly(int nvars) : nvars_(check_nvars(nvars)) {}

  // Single term; exps are doubled exponents, one per variable.
  LaurentPoly(int nvars, std::span<const int> exps, Rational coef)
      : nvars_(check_nvars(nvars)) {
    if (static_cast<int>(exps.size()) != nvars)
      throw std::invalid_argument("exponent vector length != nvars");
    if (!omf::is_zero(coef)) terms_.emplace(pack(exps), std::move(coef));
  }

  static LaurentPoly constant(int nvars, Rational c) {
    std::vector<int> e(nvars, 0);
    return LaurentPoly(nvars, e, std::move(c));
  }
  // zeta_i^(exp/2) in an nvars-variable ring (i is 0-based, exp doubled).
  static LaurentPoly monomial(int nvars, int i, int doubled_exp,
                              Rational c = Rational(1)) {
    std::vector<int> e(nvars, 0);
    e.at(i) = doubled_exp;
    return LaurentPoly(nvars, e, std::move(c));
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Key, Rational>& terms() const { return terms_; }

  Key pack(std::span<const int> exps) const {
    Key k = 0;
    for (int i = 0; i < nvars_; ++i) {
      int v = exps[i] + kBias;
      if (v < 0 || v > static_cast<int>(kMask))
        throw std::overflow_error("doubled exponent out of packed range");
      k |= Key(v) << (kBits * i);
    }
    return k;
  }
  std::vector<int> unpack(Key k) const {
    std::vector<int> e(nvars_);
    for (int i = 0; i < nvars_; ++i)
      e[i] = static_cast<int>((k >> (kBits * i)) & kMask) - kBias;
    return e;
  }

  const Rational* find(std::span<const int> exps) const {
    auto it = terms_.find(pack(exps));
    return it == terms_.end() ? nullptr : &it->second;
  }
  Rational coeff(std::span<const int> exps) const {
    const Rational* p = find(exps);
    return p ? *p : Rational(0);
  }
  Rational coeff(std::initializer_list<int> exps) const {
    return coeff(std::span<const int>(exps.begin(), exps.size()));
  }

  void add_term(std::span<const int> exps, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator*=(const Rational& s);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) {
    a *= s;
    return a;
  }
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // zeta_i = 1: sums coefficients over the i-th exponent, drops the variable.
  LaurentPoly substitute_one(int i) const;
  // All variables mapped to one zeta (exponents added); result has nvars 1.
  LaurentPoly symmetrize() const;
  // zeta_i -> zeta_i^{-1}.
  LaurentPoly invert_var(int i) const;
  // Variable permutation: new variable j carries old exponent of perm[j].
  LaurentPoly permute(std::span<const int> perm) const;
  // From a 1-variable polynomial, substitute zeta -> prod zeta_i^{r_i}
  // (r in integer, not doubled, units) into an nvars-variable ring.
  static LaurentPoly compose_monomial(const LaurentPoly& one_var, int nvars,
                                      std::span<const int> r);
  // zeta_i d/dzeta_i (true exponents, i.e. doubled/2).
  LaurentPoly theta_op(int i) const;
  // zeta_i -> zeta_i^d for every variable (exponent dilation by d >= 1).
  LaurentPoly stretch(int d) const;

  // Max |doubled exponent| over all variables and terms (0 for zero poly).
  int max_abs_exp() const;
  // Doubled-exponent extremes in variable i; zero poly yields (0, 0).
  std::pair<int, int> exp_range(int i) const;
  bool all_even() const;  // every doubled exponent even (integer exponents)

  static int check_nvars(int n) {
    if (n < 0 || n > kMaxVars)
      throw std::invalid_argument("unsupported variable count");
    return n;
  }
  // Empty polynomials act as zero of any arity and zero-variable polynomials
  // as constants of any arity; join_nvars picks the common variable count.
  static int join_nvars(const LaurentPoly& a, const LaurentPoly& b);
  // Rewrite into an nvars-variable ring (only zeros and constants can move).
  LaurentPoly promoted(int nvars) const;

 private:
  int nvars_;
  std::map<Key, Rational> terms_;  // packed doubled exponents -> coefficient

  friend class PoleFraction;
};

// D_i = zeta_i - 2 + zeta_i^{-1} in an nvars-variable ring (0-based i).
LaurentPoly pole_basis(int nvars, int i);

// Exact division p / D_i. Returns false if not exactly divisible.
bool divide_by_pole_basis(const LaurentPoly& p, int i, LaurentPoly& quot);

}  // namespace omf
