#include "core/laurent.hpp"

#include <algorithm>
#include <unordered_map>

namespace omf {

namespace {

// splitmix64: cheap strong mixing for packed exponent keys.
struct KeyHash {
  std::size_t operator()(std::uint64_t x) const {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

}  // namespace

int LaurentPoly::join_nvars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || a.nvars() == 0) return b.nvars();
  if (b.is_zero() || b.nvars() == 0) return a.nvars();
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("variable-count mismatch");
  return a.nvars();
}

LaurentPoly LaurentPoly::promoted(int nvars) const {
  if (nvars_ == nvars) return *this;
  if (is_zero()) return LaurentPoly(nvars);
  if (nvars_ == 0) return constant(nvars, terms_.begin()->second);
  throw std::invalid_argument("variable-count mismatch");
}

void LaurentPoly::add_term(std::span<const int> exps, const Rational& c) {
  if (omf::is_zero(c)) return;
  Key k = pack(exps);
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (omf::is_zero(it->second)) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  int nv = join_nvars(*this, o);
  if (nvars_ != nv) *this = promoted(nv);
  LaurentPoly tmp;
  const LaurentPoly* rp = &o;
  if (o.nvars() != nv && !o.is_zero()) {
    tmp = o.promoted(nv);
    rp = &tmp;
  }
  for (const auto& [k, c] : rp->terms_) {
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (omf::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  int nv = join_nvars(*this, o);
  if (nvars_ != nv) *this = promoted(nv);
  LaurentPoly tmp;
  const LaurentPoly* rp = &o;
  if (o.nvars() != nv && !o.is_zero()) {
    tmp = o.promoted(nv);
    rp = &tmp;
  }
  for (const auto& [k, c] : rp->terms_) {
    auto [it, fresh] = terms_.emplace(k, -c);
    if (!fresh) {
      it->second -= c;
      if (omf::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(nvars_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  if (omf::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a0, const LaurentPoly& b0) {
  int nv = LaurentPoly::join_nvars(a0, b0);
  LaurentPoly out(nv);
  if (a0.is_zero() || b0.is_zero()) return out;
  LaurentPoly at, bt;
  const LaurentPoly& a = a0.nvars() == nv ? a0 : (at = a0.promoted(nv));
  const LaurentPoly& b = b0.nvars() == nv ? b0 : (bt = b0.promoted(nv));
  if (a.max_abs_exp() + b.max_abs_exp() >= LaurentPoly::kBias)
    throw std::overflow_error("exponent range too large for packed keys");
  // Keys are biased per variable, so key(a)+key(b) carries twice the bias.
  LaurentPoly::Key base = 0;
  for (int i = 0; i < nv; ++i)
    base |= LaurentPoly::Key(LaurentPoly::kBias) << (LaurentPoly::kBits * i);

  const LaurentPoly& small = a.term_count() <= b.term_count() ? a : b;
  const LaurentPoly& big = a.term_count() <= b.term_count() ? b : a;

  std::unordered_map<LaurentPoly::Key, Rational, KeyHash> acc;
  acc.reserve(big.term_count() * 2);
  Rational tmp;
  for (const auto& [kb, cb] : big.terms()) {
    LaurentPoly::Key shifted = kb - base;
    for (const auto& [ks, cs] : small.terms()) {
      mpq_mul(tmp.get_mpq_t(), cb.get_mpq_t(), cs.get_mpq_t());
      auto [it, fresh] = acc.try_emplace(shifted + ks);
      if (fresh)
        mpq_swap(it->second.get_mpq_t(), tmp.get_mpq_t());
      else
        it->second += tmp;
    }
  }
  for (auto& [k, c] : acc)
    if (!omf::is_zero(c)) out.terms_.emplace(k, std::move(c));
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (nvars_ != o.nvars_) {
    int nv = join_nvars(*this, o);
    return promoted(nv).terms_ == o.promoted(nv).terms_;
  }
  return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::substitute_one(int i) const {
  if (i < 0 || i >= nvars_) throw std::out_of_range("variable index");
  LaurentPoly out(nvars_ - 1);
  std::vector<int> e;
  for (const auto& [k, c] : terms_) {
    e = unpack(k);
    e.erase(e.begin() + i);
    out.add_term(e, c);
  }
  return out;
}

LaurentPoly LaurentPoly::symmetrize() const {
  LaurentPoly out(1);
  for (const auto& [k, c] : terms_) {
    auto e = unpack(k);
    int s = 0;
    for (int v : e) s += v;
    int se[1] = {s};
    out.add_term(se, c);
  }
  return out;
}

LaurentPoly LaurentPoly::invert_var(int i) const {
  if (i < 0 || i >= nvars_) throw std::out_of_range("variable index");
  LaurentPoly out(nvars_);
  for (const auto& [k, c] : terms_) {
    auto e = unpack(k);
    e[i] = -e[i];
    out.add_term(e, c);
  }
  return out;
}

LaurentPoly LaurentPoly::permute(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != nvars_)
    throw std::invalid_argument("permutation length != nvars");
  LaurentPoly out(nvars_);
  std::vector<int> e2(nvars_);
  for (const auto& [k, c] : terms_) {
    auto e = unpack(k);
    for (int j = 0; j < nvars_; ++j) e2[j] = e[perm[j]];
    out.add_term(e2, c);
  }
  return out;
}

LaurentPoly LaurentPoly::compose_monomial(const LaurentPoly& one_var, int nvars,
                                          std::span<const int> r) {
  if (!one_var.is_zero() && one_var.nvars() != 1)
    throw std::invalid_argument("compose_monomial expects one variable");
  if (static_cast<int>(r.size()) != nvars)
    throw std::invalid_argument("exponent image length != nvars");
  LaurentPoly out(nvars);
  std::vector<int> e(nvars);
  for (const auto& [k, c] : one_var.terms_) {
    int d = one_var.unpack(k)[0];
    for (int j = 0; j < nvars; ++j) e[j] = d * r[j];
    out.add_term(e, c);
  }
  return out;
}

LaurentPoly LaurentPoly::theta_op(int i) const {
  if (i < 0 || i >= nvars_) throw std::out_of_range("variable index");
  LaurentPoly out(nvars_);
  for (const auto& [k, c] : terms_) {
    auto e = unpack(k);
    if (e[i] == 0) continue;
    out.add_term(e, c * rat(e[i], 2));
  }
  return out;
}

LaurentPoly LaurentPoly::stretch(int d) const {
  if (d < 1) throw std::invalid_argument("stretch factor must be >= 1");
  if (d == 1) return *this;
  LaurentPoly out(nvars_);
  for (const auto& [k, c] : terms_) {
    auto e = unpack(k);
    for (int& v : e) v *= d;
    out.add_term(e, c);
  }
  return out;
}

int LaurentPoly::max_abs_exp() const {
  int m = 0;
  for (const auto& [k, c] : terms_) {
    auto e = unpack(k);
    for (int v : e) m = std::max(m, std::abs(v));
  }
  return m;
}

std::pair<int, int> LaurentPoly::exp_range(int i) const {
  if (i < 0 || i >= nvars_) throw std::out_of_range("variable index");
  if (terms_.empty()) return {0, 0};
  int lo = 1 << 30, hi = -(1 << 30);
  for (const auto& [k, c] : terms_) {
    int v = static_cast<int>((k >> (kBits * i)) & kMask) - kBias;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

bool LaurentPoly::all_even() const {
  for (const auto& [k, c] : terms_) {
    auto e = unpack(k);
    for (int v : e)
      if (v & 1) return false;
  }
  return true;
}

LaurentPoly pole_basis(int nvars, int i) {
  LaurentPoly d = LaurentPoly::monomial(nvars, i, 2);
  d += LaurentPoly::constant(nvars, Rational(-2));
  d += LaurentPoly::monomial(nvars, i, -2);
  return d;
}

bool divide_by_pole_basis(const LaurentPoly& p, int i, LaurentPoly& quot) {
  // Divide by D_i = zeta_i - 2 + zeta_i^{-1}, leading term zeta_i (doubled
  // exponent +2). Repeatedly cancel the highest zeta_i-stratum. Termination:
  // the candidate quotient exponent may not drop below (min exponent of p)
  // since D_i's lowest term is zeta_i^{-1}.
  quot = LaurentPoly(p.nvars());
  if (p.is_zero()) return true;
  if (i < 0 || i >= p.nvars()) throw std::out_of_range("variable index");
  auto [lo, hi] = p.exp_range(i);
  LaurentPoly rem = p;
  LaurentPoly d = pole_basis(p.nvars(), i);
  while (!rem.is_zero()) {
    auto [rlo, rhi] = rem.exp_range(i);
    if (rhi - 2 < lo) return false;  // cannot be exact
    // Extract the top stratum (terms with zeta_i-exponent == rhi).
    LaurentPoly top(p.nvars());
    for (const auto& [k, c] : rem.terms()) {
      int v = static_cast<int>((k >> (LaurentPoly::kBits * i)) &
                               LaurentPoly::kMask) -
              LaurentPoly::kBias;
      if (v == rhi) {
        auto e = rem.unpack(k);
        e[i] -= 2;  // divide stratum by the leading zeta_i of D_i
        top.add_term(e, c);
      }
    }
    quot += top;
    rem -= top * d;
  }
  return true;
}

}  // namespace omf
