#include "core/polefrac.hpp"

#include <algorithm>
#include <stdexcept>

namespace omf {

PoleFraction::PoleFraction(LaurentPoly num, std::vector<int> pole_orders)
    : num_(std::move(num)), pole_(std::move(pole_orders)) {
  if (static_cast<int>(pole_.size()) != num_.nvars())
    throw std::invalid_argument("pole_orders length != nvars");
  for (int e : pole_)
    if (e < 0) throw std::invalid_argument("negative pole order");
  reduce();
}

bool PoleFraction::is_polynomial() const {
  return std::all_of(pole_.begin(), pole_.end(), [](int e) { return e == 0; });
}

const LaurentPoly& PoleFraction::as_poly() const {
  if (!is_polynomial())
    throw std::domain_error("pole-fraction has uncancelled poles");
  return num_;
}

void PoleFraction::reduce() {
  if (num_.is_zero()) {
    std::fill(pole_.begin(), pole_.end(), 0);
    return;
  }
  LaurentPoly quot;
  for (int i = 0; i < num_.nvars(); ++i) {
    while (pole_[i] > 0 && divide_by_pole_basis(num_, i, quot)) {
      num_ = std::move(quot);
      --pole_[i];
    }
  }
}

PoleFraction PoleFraction::promoted(int nvars) const {
  if (static_cast<int>(pole_.size()) == nvars) return *this;
  PoleFraction out;
  out.num_ = num_.promoted(nvars);
  out.pole_.assign(nvars, 0);
  return out;
}

PoleFraction& PoleFraction::operator+=(const PoleFraction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  int nv = LaurentPoly::join_nvars(num_, o.num_);
  if (nvars() != nv) *this = promoted(nv);
  PoleFraction ot;
  const PoleFraction* op = &o;
  if (o.nvars() != nv) {
    ot = o.promoted(nv);
    op = &ot;
  }
  LaurentPoly a = num_, b = op->num_;
  std::vector<int> pole(nv);
  for (int i = 0; i < nv; ++i) {
    pole[i] = std::max(pole_[i], op->pole_[i]);
    for (int k = pole_[i]; k < pole[i]; ++k) a = a * pole_basis(nv, i);
    for (int k = op->pole_[i]; k < pole[i]; ++k) b = b * pole_basis(nv, i);
  }
  num_ = a + b;
  pole_ = std::move(pole);
  reduce();
  return *this;
}

PoleFraction& PoleFraction::operator-=(const PoleFraction& o) {
  *this += -o;
  return *this;
}

PoleFraction PoleFraction::operator-() const {
  PoleFraction out = *this;
  out.num_ = -out.num_;
  return out;
}

PoleFraction operator*(const PoleFraction& a0, const PoleFraction& b0) {
  int nv = LaurentPoly::join_nvars(a0.num_, b0.num_);
  if (a0.is_zero() || b0.is_zero()) return PoleFraction::zero(nv);
  PoleFraction at, bt;
  const PoleFraction& a = a0.nvars() == nv ? a0 : (at = a0.promoted(nv));
  const PoleFraction& b = b0.nvars() == nv ? b0 : (bt = b0.promoted(nv));
  PoleFraction out;
  out.num_ = a.num_ * b.num_;
  out.pole_.assign(nv, 0);
  for (int i = 0; i < nv; ++i) out.pole_[i] = a.pole_[i] + b.pole_[i];
  out.reduce();
  return out;
}

bool PoleFraction::operator==(const PoleFraction& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (nvars() != o.nvars()) {
    int nv = LaurentPoly::join_nvars(num_, o.num_);
    return promoted(nv) == o.promoted(nv);
  }
  return pole_ == o.pole_ && num_ == o.num_;
}

PoleFraction PoleFraction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  int nv = nvars();
  LaurentPoly m = num_;
  std::vector<int> g(nv, 0);
  LaurentPoly quot;
  for (int i = 0; i < nv; ++i) {
    while (divide_by_pole_basis(m, i, quot)) {
      m = std::move(quot);
      ++g[i];
    }
  }
  if (m.term_count() != 1)
    throw std::domain_error(
        "inverse defined only for monomial times pole-basis factors");
  auto [key, coef] = *m.terms().begin();
  auto e = m.unpack(key);
  for (int& v : e) v = -v;
  LaurentPoly inv_num(nv, e, Rational(1) / coef);
  std::vector<int> pole(nv, 0);
  for (int i = 0; i < nv; ++i) {
    if (pole_[i] >= g[i]) {
      for (int k = 0; k < pole_[i] - g[i]; ++k)
        inv_num = inv_num * pole_basis(nv, i);
    } else {
      pole[i] = g[i] - pole_[i];
    }
  }
  return PoleFraction(std::move(inv_num), std::move(pole));
}

PoleFraction PoleFraction::embed(int nvars, int i) const {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
  if (is_zero()) return PoleFraction::zero(nvars);
  if (this->nvars() != 1)
    throw std::invalid_argument("embed expects a one-variable fraction");
  std::vector<int> r(nvars, 0);
  r[i] = 1;
  PoleFraction out;
  out.num_ = LaurentPoly::compose_monomial(num_, nvars, r);
  out.pole_.assign(nvars, 0);
  out.pole_[i] = pole_[0];
  return out;
}

PoleFraction PoleFraction::substitute_one(int i) const {
  if (i < 0 || i >= nvars()) throw std::out_of_range("variable index");
  if (pole_[i] != 0)
    throw std::domain_error("restriction along a polar divisor");
  PoleFraction out;
  out.num_ = num_.substitute_one(i);
  out.pole_ = pole_;
  out.pole_.erase(out.pole_.begin() + i);
  out.reduce();
  return out;
}

PoleFraction PoleFraction::symmetrize() const {
  PoleFraction out;
  out.num_ = num_.symmetrize();
  int total = 0;
  for (int e : pole_) total += e;
  out.pole_.assign(1, total);
  out.reduce();
  return out;
}

PoleFraction PoleFraction::invert_var(int i) const {
  PoleFraction out;
  out.num_ = num_.invert_var(i);  // D_i is symmetric under the flip
  out.pole_ = pole_;
  return out;
}

PoleFraction PoleFraction::permute(std::span<const int> perm) const {
  PoleFraction out;
  out.num_ = num_.permute(perm);
  out.pole_.resize(pole_.size());
  for (std::size_t j = 0; j < pole_.size(); ++j) out.pole_[j] = pole_[perm[j]];
  return out;
}

PoleFraction PoleFraction::theta_op(int i) const {
  if (i < 0 || i >= nvars()) throw std::out_of_range("variable index");
  int nv = nvars();
  if (pole_[i] == 0) {
    PoleFraction out;
    out.num_ = num_.theta_op(i);
    out.pole_ = pole_;
    out.reduce();
    return out;
  }
  // (n / D^e)' = (n' D - e n D') / D^{e+1} with D' = zeta_i - zeta_i^{-1}.
  LaurentPoly dprime = LaurentPoly::monomial(nv, i, 2);
  dprime += LaurentPoly::monomial(nv, i, -2, Rational(-1));
  LaurentPoly n = num_.theta_op(i) * pole_basis(nv, i) -
                  num_ * dprime * Rational(pole_[i]);
  std::vector<int> pole = pole_;
  pole[i] += 1;
  return PoleFraction(std::move(n), std::move(pole));
}

}  // namespace omf
