#pragma once

// Truncated series in q over a pluggable exact coefficient ring. Exponents
// live on the (1/24)Z lattice and are handled as integers scaled by 24
// ("e24"). Every series carries an exclusive truncation exponent prec24.
//
// Storage invariant: coefficients are stored for [off24, off24 + size);
// exponents below off24 or between the stored window and prec24 are known
// zeros; exponents at or beyond prec24 are unknown. A default-constructed
// series is the zero series with unlimited precision, which is the correct
// identity for accumulation slots.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "core/polefrac.hpp"
#include "core/rational.hpp"

namespace omf {

inline bool coeff_is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool coeff_is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline bool coeff_is_zero(const PoleFraction& f) { return f.is_zero(); }

inline Rational coeff_inverse(const Rational& r) {
  if (sgn(r) == 0) throw std::domain_error("inverse of zero");
  return Rational(1) / r;
}
inline PoleFraction coeff_inverse(const PoleFraction& f) { return f.inverse(); }
inline LaurentPoly coeff_inverse(const LaurentPoly& p) {
  if (p.term_count() != 1)
    throw std::domain_error("leading coefficient is not a monomial");
  auto [key, coef] = *p.terms().begin();
  auto e = p.unpack(key);
  for (int& v : e) v = -v;
  return LaurentPoly(p.nvars(), e, Rational(1) / coef);
}

inline Rational make_unit(const Rational*) { return Rational(1); }
inline LaurentPoly make_unit(const LaurentPoly*) {
  return LaurentPoly::constant(0, Rational(1));
}
inline PoleFraction make_unit(const PoleFraction*) {
  return PoleFraction::constant(0, Rational(1));
}

template <class R>
class QSeries {
 public:
  static constexpr long kInfPrec = 1LL << 40;

  QSeries() : off24_(0), prec24_(kInfPrec) {}
  QSeries(long off24, long prec24)
      : off24_(off24), prec24_(std::max(off24, prec24)) {}

  static QSeries zero(long prec24) { return QSeries(prec24, prec24); }
  static QSeries monomial(long e24, R coef, long prec24) {
    QSeries s(std::min(e24, prec24), prec24);
    if (e24 < prec24) s.set(e24, std::move(coef));
    return s;
  }

  long off24() const { return off24_; }
  long prec24() const { return prec24_; }
  long stored_end24() const { return off24_ + static_cast<long>(c_.size()); }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const R& x) { return coeff_is_zero(x); });
  }
  // Lowest exponent with a nonzero stored coefficient; prec24 if none.
  long valuation24() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!coeff_is_zero(c_[i])) return off24_ + static_cast<long>(i);
    return prec24_;
  }

  const R* peek(long e24) const {
    if (e24 < off24_ || e24 >= stored_end24()) return nullptr;
    return &c_[static_cast<std::size_t>(e24 - off24_)];
  }
  R get(long e24) const {
    if (e24 >= prec24_)
      throw std::out_of_range("coefficient beyond truncation");
    const R* p = peek(e24);
    return p ? *p : R{};
  }
  void set(long e24, R v) {
    grow_to_include(e24);
    c_[static_cast<std::size_t>(e24 - off24_)] = std::move(v);
  }
  void add_at(long e24, const R& v) {
    if (coeff_is_zero(v)) return;
    grow_to_include(e24);
    c_[static_cast<std::size_t>(e24 - off24_)] += v;
  }

  // Trim known-zero borders (tightens product precision bookkeeping).
  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && coeff_is_zero(c_[lead])) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      off24_ += static_cast<long>(lead);
    }
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }

  QSeries& operator+=(const QSeries& o) {
    long prec = std::min(prec24_, o.prec24_);
    QSeries out(std::min(off24_, o.off24_), prec);
    auto pour = [&](const QSeries& s) {
      for (std::size_t i = 0; i < s.c_.size(); ++i) {
        long e = s.off24_ + static_cast<long>(i);
        if (e < prec && !coeff_is_zero(s.c_[i])) out.add_at(e, s.c_[i]);
      }
    };
    pour(*this);
    pour(o);
    out.normalize();
    *this = std::move(out);
    return *this;
  }
  friend QSeries operator+(QSeries a, const QSeries& b) {
    a += b;
    return a;
  }
  QSeries operator-() const {
    QSeries out = *this;
    for (R& x : out.c_) x = -x;
    return out;
  }
  QSeries& operator-=(const QSeries& o) {
    *this += -o;
    return *this;
  }
  friend QSeries operator-(QSeries a, const QSeries& b) {
    a -= b;
    return a;
  }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    long va = a.valuation24(), vb = b.valuation24();
    long prec = std::min(clamp_add(a.prec24_, vb), clamp_add(b.prec24_, va));
    QSeries out(std::min(clamp_add(va, vb), prec), prec);
    std::vector<std::size_t> bi;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!coeff_is_zero(b.c_[j])) bi.push_back(j);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (coeff_is_zero(a.c_[i])) continue;
      long ea = a.off24_ + static_cast<long>(i);
      for (std::size_t j : bi) {
        long e = ea + b.off24_ + static_cast<long>(j);
        if (e >= prec) break;
        out.add_at(e, a.c_[i] * b.c_[j]);
      }
    }
    out.normalize();
    return out;
  }
  QSeries& operator*=(const QSeries& o) {
    *this = *this * o;
    return *this;
  }

  friend QSeries operator*(QSeries a, const Rational& s) {
    for (R& x : a.c_) x = x * s;
    a.normalize();
    return a;
  }

  QSeries pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    if (e == 0) return one_like(*this);
    QSeries acc = *this;
    for (long k = 1; k < e; ++k) acc = acc * (*this);
    return acc;
  }

  // Multiplicative inverse by long division.
  QSeries inverse() const {
    long v = valuation24();
    if (v >= prec24_) throw std::domain_error("inverse of zero series");
    R lead_inv = coeff_inverse(*peek(v));
    long depth = prec24_ - v;  // number of computable coefficients
    QSeries out(-v, -v + depth);
    out.set(-v, lead_inv);
    for (long e = 1; e < depth; ++e) {
      R acc{};
      for (long i = 1; i <= e; ++i) {
        const R* a = peek(v + i);
        if (!a || coeff_is_zero(*a)) continue;
        const R* b = out.peek(-v + e - i);
        if (!b || coeff_is_zero(*b)) continue;
        acc += *a * *b;
      }
      if (!coeff_is_zero(acc)) {
        R lead_cp = lead_inv;
        out.set(-v + e, -(lead_cp * acc));
      }
    }
    out.normalize();
    return out;
  }

  QSeries exp() const {
    long v = valuation24();
    if (v <= 0 && v < prec24_)
      throw std::domain_error("exp needs strictly positive valuation");
    QSeries out(0, prec24_);
    out.set(0, make_unit(static_cast<const R*>(nullptr)));
    QSeries pw;  // unlimited-precision 1; precision enters through *this
    pw.set(0, make_unit(static_cast<const R*>(nullptr)));
    Rational fact(1);
    for (long k = 1; v < prec24_ && k * v < prec24_; ++k) {
      pw = pw * (*this);
      fact *= Rational(k);
      out += pw * (Rational(1) / fact);
    }
    return out;
  }

  QSeries scale_variable(long m) const {
    if (m < 1) throw std::invalid_argument("scale factor must be >= 1");
    QSeries out(off24_ * m,
                prec24_ >= kInfPrec ? kInfPrec : prec24_ * m);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!coeff_is_zero(c_[i]))
        out.set((off24_ + static_cast<long>(i)) * m, c_[i]);
    return out;
  }

  QSeries shift(long delta24) const {
    QSeries out = *this;
    out.off24_ += delta24;
    if (out.prec24_ < kInfPrec) out.prec24_ += delta24;
    return out;
  }

  QSeries truncate(long prec24) const {
    if (prec24 >= prec24_) return *this;
    QSeries out(std::min(off24_, prec24), prec24);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      long e = off24_ + static_cast<long>(i);
      if (e >= prec24) break;
      if (!coeff_is_zero(c_[i])) out.set(e, c_[i]);
    }
    out.normalize();
    return out;
  }

  template <class F>
  auto map(F&& f) const
      -> QSeries<std::decay_t<decltype(f(std::declval<const R&>()))>> {
    using R2 = std::decay_t<decltype(f(std::declval<const R&>()))>;
    QSeries<R2> out(off24_, prec24_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!coeff_is_zero(c_[i]))
        out.set(off24_ + static_cast<long>(i), f(c_[i]));
    out.normalize();
    return out;
  }

  // Visit stored nonzero coefficients as (e24, value).
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!coeff_is_zero(c_[i])) f(off24_ + static_cast<long>(i), c_[i]);
  }

  // Equality of known coefficients on the common precision window.
  bool operator==(const QSeries& o) const {
    long prec = std::min(prec24_, o.prec24_);
    long lo = std::min(off24_, o.off24_);
    for (long e = lo; e < prec; ++e) {
      const R* a = peek(e);
      const R* b = o.peek(e);
      bool za = !a || coeff_is_zero(*a);
      bool zb = !b || coeff_is_zero(*b);
      if (za != zb) return false;
      if (!za && !(*a == *b)) return false;
    }
    return true;
  }
  bool operator!=(const QSeries& o) const { return !(*this == o); }

 private:
  long off24_;
  long prec24_;
  std::vector<R> c_;

  static long clamp_add(long p, long d) {
    return p >= kInfPrec ? kInfPrec : p + d;
  }
  static QSeries one_like(const QSeries& s) {
    long v = s.valuation24();
    long depth = s.prec24_ >= kInfPrec ? kInfPrec : s.prec24_ - v;
    QSeries one(0, depth);
    if (depth > 0) one.set(0, make_unit(static_cast<const R*>(nullptr)));
    return one;
  }
  void grow_to_include(long e24) {
    if (e24 >= prec24_ || e24 < off24_ - (1LL << 32))
      throw std::out_of_range("coefficient beyond truncation");
    if (c_.empty()) {
      off24_ = e24;
      c_.resize(1);
      return;
    }
    if (e24 < off24_) {
      std::vector<R> grown(c_.size() + static_cast<std::size_t>(off24_ - e24));
      for (std::size_t i = 0; i < c_.size(); ++i)
        grown[i + static_cast<std::size_t>(off24_ - e24)] = std::move(c_[i]);
      c_ = std::move(grown);
      off24_ = e24;
    } else if (e24 >= stored_end24()) {
      c_.resize(static_cast<std::size_t>(e24 - off24_) + 1);
    }
  }

  template <class S>
  friend class QSeries;
};

using RatSeries = QSeries<Rational>;
using PolySeries = QSeries<LaurentPoly>;
using FracSeries = QSeries<PoleFraction>;
// Forms on the rank-2 hyperbolic lattice: outer variable q1, inner q2.
using BiQSeries = QSeries<QSeries<Rational>>;

inline bool coeff_is_zero(const QSeries<Rational>& s) { return s.is_zero(); }
inline QSeries<Rational> coeff_inverse(const QSeries<Rational>& s) {
  return s.inverse();
}
inline QSeries<Rational> make_unit(const QSeries<Rational>*) {
  QSeries<Rational> u;
  u.set(0, Rational(1));
  return u;
}

// Lift a scalar q-series into one with coefficients in ring R (constants
// broadcast across any variable count).
template <class R>
QSeries<R> promote_scalar(const RatSeries& s) {
  return s.map([](const Rational& r) {
    if constexpr (std::is_same_v<R, LaurentPoly>)
      return LaurentPoly::constant(0, r);
    else
      return PoleFraction::constant(0, r);
  });
}

}  // namespace omf
