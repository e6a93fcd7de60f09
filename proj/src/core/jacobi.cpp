#include "core/jacobi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace omf {

namespace {

// zeta -> zeta_i on every coefficient of a one-variable polynomial series.
PolySeries embed_polyseries(const PolySeries& s, int nvars, int i) {
  std::vector<int> r(nvars, 0);
  r.at(i) = 1;
  return s.map([&](const LaurentPoly& c) {
    return LaurentPoly::compose_monomial(c, nvars, r);
  });
}

FracSeries to_frac(const PolySeries& s) {
  return s.map([](const LaurentPoly& c) { return PoleFraction(c); });
}

std::vector<int> doubled_exps(const LaurentPoly& p, LaurentPoly::Key k) {
  return p.unpack(k);
}

bool first_nonzero_positive(const std::vector<int>& e) {
  for (int v : e) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return false;
}

}  // namespace

LaurentPoly JacobiSeries::q0() const {
  const PoleFraction* c = data.peek(0);
  if (!c) return LaurentPoly(nvars);
  return c->as_poly();
}

JacobiSeries jac_add(const JacobiSeries& a, const JacobiSeries& b) {
  if (a.is_zero()) {
    JacobiSeries out = b;
    out.data = a.data + b.data;
    return out;
  }
  if (b.is_zero()) {
    JacobiSeries out = a;
    out.data = a.data + b.data;
    return out;
  }
  if (a.weight != b.weight || a.nvars != b.nvars ||
      a.index_scale != b.index_scale)
    throw std::invalid_argument("incompatible Jacobi summands");
  return {a.weight, a.nvars, a.index_scale, a.data + b.data};
}

JacobiSeries jac_sub(const JacobiSeries& a, const JacobiSeries& b) {
  return jac_add(a, jac_scale(b, Rational(-1)));
}

JacobiSeries jac_scale(const JacobiSeries& a, const Rational& s) {
  JacobiSeries out = a;
  out.data = a.data * s;
  return out;
}

JacobiSeries jac_mul(const JacobiSeries& a, const JacobiSeries& b) {
  int nvars = std::max(a.nvars, b.nvars);
  if (a.nvars != b.nvars && a.nvars != 0 && b.nvars != 0)
    throw std::invalid_argument("incompatible Jacobi factors");
  int index = 0;
  if (a.nvars == nvars) index += a.index_scale;
  if (b.nvars == nvars) index += b.index_scale;
  return {a.weight + b.weight, nvars, index, a.data * b.data};
}

bool jac_equal(const JacobiSeries& a, const JacobiSeries& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.weight == b.weight && a.nvars == b.nvars &&
         a.index_scale == b.index_scale && a.data == b.data;
}

JacobiSeries phi_basic(int kind, long prec24) {
  long p = prec24 + 18;
  PolySeries t11 = theta_series(Theta::k11, p);
  PolySeries num = t11 * t11;  // valuation q^{1/4}, integer zeta powers
  RatSeries eta6 = dedekind_eta(p).pow(6);
  PolySeries phi_m2 =
      num * promote_scalar<LaurentPoly>(eta6.inverse());
  if (kind == -2)
    return {-2, 1, 1, to_frac(phi_m2).truncate(prec24)};
  if (kind != 0) throw std::invalid_argument("phi_basic kind must be -2 or 0");
  FracSeries w = wp_series(prec24);
  FracSeries phi0 = (w * to_frac(phi_m2)) * Rational(12);
  phi0 = phi0.truncate(prec24);
  phi0.for_each([](long, const PoleFraction& c) {
    if (!c.is_polynomial())
      throw std::logic_error("wp pole failed to cancel in phi_{0,1}");
  });
  return {0, 1, 1, phi0};
}

JacobiSeries embed_jacobi(const JacobiSeries& f, int nvars, int i) {
  if (f.nvars != 1) throw std::invalid_argument("embed expects one variable");
  FracSeries data =
      f.data.map([&](const PoleFraction& c) { return c.embed(nvars, i); });
  return {f.weight, nvars, f.index_scale, std::move(data)};
}

JacobiSeries external_product(const std::vector<JacobiSeries>& parts,
                              const RatSeries& scalar, int scalar_weight) {
  int n = static_cast<int>(parts.size());
  FracSeries acc = promote_scalar<PoleFraction>(scalar);
  int weight = scalar_weight;
  int index = parts.empty() ? 1 : parts[0].index_scale;
  for (int i = 0; i < n; ++i) {
    if (parts[i].index_scale != index)
      throw std::invalid_argument("mixed index scales in external product");
    acc = acc * embed_jacobi(parts[i], n, i).data;
    weight += parts[i].weight;
  }
  return {weight, n, index, std::move(acc)};
}

JacobiSeries fk_symmetric(int n, int k, long prec24) {
  if (n < 1 || n > LaurentPoly::kMaxVars || k < 0 || k > n)
    throw std::invalid_argument("fk_symmetric arguments");
  JacobiSeries phi_m2 = phi_basic(-2, prec24);
  JacobiSeries phi_0 = phi_basic(0, prec24);
  std::vector<FracSeries> em(n), e0(n);
  for (int i = 0; i < n; ++i) {
    em[i] = embed_jacobi(phi_m2, n, i).data;
    e0[i] = embed_jacobi(phi_0, n, i).data;
  }
  FracSeries acc;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    FracSeries term = (mask & 1u) ? em[0] : e0[0];
    for (int i = 1; i < n; ++i)
      term = term * ((mask >> i) & 1u ? em[i] : e0[i]);
    acc += term;
  }
  return {-2 * k, n, 1, acc.truncate(prec24)};
}

JacobiSeries psi_n(int n, long prec24) {
  if (n < 1 || n > 5) throw std::invalid_argument("psi_n needs 1 <= n <= 5");
  long p = prec24 + 12;
  PolySeries num(0, p + 12);
  const Theta kinds[3] = {Theta::k00, Theta::k01, Theta::k10};
  for (int t = 0; t < 3; ++t) {
    PolySeries th = theta_series(kinds[t], p);
    PolySeries th2 = th * th;
    PolySeries prod =
        promote_scalar<LaurentPoly>(theta_null(kinds[t], p).pow(12 - 2 * n));
    for (int i = 0; i < n; ++i) prod = prod * embed_polyseries(th2, n, i);
    if (t == 0)
      num = prod;
    else
      num -= prod;
  }
  RatSeries inv12 = dedekind_eta(p).pow(12).inverse();
  PolySeries psi =
      (num * promote_scalar<LaurentPoly>(inv12)) * Rational(1, 2);
  psi = psi.truncate(prec24);
  psi.for_each([](long e24, const LaurentPoly& c) {
    if (e24 % 24 != 0 || !c.all_even())
      throw std::logic_error("half-integer exponent survived in psi_n");
  });
  return {0, n, 1, to_frac(psi)};
}

namespace {

JacobiSeries hecke_v0(const JacobiSeries& f) {
  int k = f.weight;
  if (k < 2 || k % 2 != 0)
    throw std::domain_error("V_0 requires even weight >= 2");
  long prec = f.data.prec24();
  LaurentPoly q0 = f.q0();
  FracSeries acc;
  std::vector<int> zero(f.nvars, 0);
  Rational c00 = q0.coeff(zero);
  if (k >= 4 && !is_zero(c00)) {
    Rational scale = -c00 * bernoulli(k) / Rational(2 * k);
    acc += promote_scalar<PoleFraction>(eisenstein(k, prec) * scale);
  }
  FracSeries wlayer;
  bool have_wlayer = false;
  for (const auto& [key, c] : q0.terms()) {
    auto e = doubled_exps(q0, key);
    if (std::all_of(e.begin(), e.end(), [](int v) { return v == 0; }))
      continue;
    if (!first_nonzero_positive(e)) continue;  // one term per +-r pair
    int var = -1;
    for (int i = 0; i < f.nvars; ++i) {
      if (e[i] == 0) continue;
      if (var != -1 || e[i] != 2)
        throw std::domain_error(
            "V_0 Weierstrass layer needs unit-vector q^0 exponents");
      var = i;
    }
    if (!have_wlayer) {
      wlayer = wp_layer(k - 2, prec);
      have_wlayer = true;
    }
    FracSeries embedded = wlayer.map(
        [&](const PoleFraction& x) { return x.embed(f.nvars, var); });
    acc += embedded * c;
  }
  acc = acc.truncate(prec);
  return {k, f.nvars, 0, std::move(acc)};
}

}  // namespace

JacobiSeries hecke_v(const JacobiSeries& f, long N) {
  if (N < 0) throw std::invalid_argument("negative Hecke index");
  if (N == 0) return hecke_v0(f);
  long v24 = f.data.valuation24();
  // Weakly holomorphic sources reach down to q^{vq}; with d <= N the output
  // cannot reach below vq * N.
  long vq = v24 >= 0 ? 0 : -((-v24 + 23) / 24);
  long pint = f.data.prec24() / 24;  // exclusive integer q-precision
  long out_n = (pint - 1) / N + 1;
  long lo_n = std::min(0L, vq * N);
  JacobiSeries out{f.weight, f.nvars,
                   static_cast<int>(f.index_scale * N),
                   FracSeries(24 * lo_n, 24 * out_n)};
  for (long n = lo_n; n < out_n; ++n) {
    LaurentPoly acc(f.nvars);
    long g = std::gcd(n, N);
    for (long d = 1; d <= g; ++d) {
      if (g % d != 0) continue;
      const PoleFraction* c = f.data.peek(24 * (N * n) / (d * d));
      if (!c || c->is_zero()) continue;
      acc += c->as_poly().stretch(static_cast<int>(d)) *
             rat_pow(Rational(d), f.weight - 1);
    }
    if (!acc.is_zero()) out.data.set(24 * n, PoleFraction(std::move(acc)));
  }
  out.data.normalize();
  return out;
}

SingularReport classify(const JacobiSeries& f) {
  SingularReport rep;
  rep.is_weak = f.data.valuation24() >= 0;
  rep.is_holomorphic = true;
  rep.is_cusp = true;
  int m = f.index_scale;
  if (f.nvars > 0 && m < 1)
    throw std::domain_error("classify needs a positive index scale");
  f.data.for_each([&](long e24, const PoleFraction& pf) {
    const LaurentPoly& poly = pf.as_poly();
    for (const auto& [key, c] : poly.terms()) {
      auto e = poly.unpack(key);
      Rational norm = rat(e24, 24);
      for (int v : e) norm -= rat(static_cast<long>(v) * v, 16L * m);
      if (sgn(norm) < 0) {
        rep.is_holomorphic = false;
        SingularEntry entry;
        entry.n_exp = e24 / 24;
        for (int v : e) {
          if (v % 2 != 0)
            throw std::domain_error("half-integer elliptic exponent");
          entry.r.push_back(v / 2);
        }
        entry.coeff = c;
        entry.norm = norm;
        rep.entries.push_back(std::move(entry));
      }
      if (sgn(norm) <= 0) rep.is_cusp = false;
    }
  });
  if (!rep.is_weak) rep.is_holomorphic = false;
  if (!rep.is_holomorphic) rep.is_cusp = false;
  return rep;
}

JacobiSeries restrict_var(const JacobiSeries& f, int i) {
  FracSeries data = f.data.map([&](const PoleFraction& c) {
    // Coefficients of fewer variables are constant in the dropped one.
    return c.nvars() > i ? c.substitute_one(i) : c;
  });
  return {f.weight, f.nvars - 1, f.index_scale, std::move(data)};
}

bool elliptic_invariant(const JacobiSeries& f) {
  int m = f.index_scale;
  if (f.nvars == 0) return true;
  if (m < 1) throw std::domain_error("needs a positive index scale");
  bool ok = true;
  f.data.for_each([&](long e24, const PoleFraction& pf) {
    if (!ok) return;
    const LaurentPoly& poly = pf.as_poly();
    for (const auto& [key, c] : poly.terms()) {
      auto e = poly.unpack(key);
      for (int i = 0; i < f.nvars && ok; ++i) {
        for (int sign : {1, -1}) {
          long ri = e[i] / 2;  // integer exponents expected here
          long target = e24 + 24 * (sign * ri + m);
          if (target >= f.data.prec24()) continue;  // outside the window
          auto e2 = e;
          e2[i] += sign * 4 * m;
          Rational other(0);
          if (const PoleFraction* pc = f.data.peek(target))
            other = pc->as_poly().coeff(e2);
          if (other != c) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) break;
    }
  });
  return ok;
}

LinearSolution solve_exact(std::vector<std::vector<Rational>> a,
                           std::vector<Rational> rhs) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::vector<long> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && sgn(a[sel][col]) == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[rank]);
    std::swap(rhs[sel], rhs[rank]);
    Rational inv = Rational(1) / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    rhs[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || sgn(a[r][col]) == 0) continue;
      Rational factor = a[r][col];
      for (std::size_t j = col; j < cols; ++j)
        a[r][j] -= factor * a[rank][j];
      rhs[r] -= factor * rhs[rank];
    }
    pivot_of_col[col] = static_cast<long>(rank);
    ++rank;
  }
  LinearSolution sol;
  for (std::size_t r = rank; r < rows; ++r)
    if (sgn(rhs[r]) != 0) return sol;  // inconsistent
  sol.feasible = true;
  sol.particular.assign(cols, Rational(0));
  for (std::size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] >= 0)
      sol.particular[col] = rhs[static_cast<std::size_t>(pivot_of_col[col])];
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    std::vector<Rational> dir(cols, Rational(0));
    dir[free_col] = Rational(1);
    for (std::size_t col = 0; col < cols; ++col)
      if (pivot_of_col[col] >= 0)
        dir[col] = -a[static_cast<std::size_t>(pivot_of_col[col])][free_col];
    sol.nullspace.push_back(std::move(dir));
  }
  return sol;
}

namespace {

// Products prod_i phi_{eps_i,1}(z_i) for the given selection masks, reusing
// partial products across masks that share a prefix of variables.
std::map<unsigned, FracSeries> mask_products(int n,
                                             const std::vector<unsigned>& masks,
                                             long pe) {
  JacobiSeries phi_m2 = phi_basic(-2, pe);
  JacobiSeries phi_0 = phi_basic(0, pe);
  std::vector<FracSeries> em(n), e0(n);
  for (int i = 0; i < n; ++i) {
    em[i] = embed_jacobi(phi_m2, n, i).data;
    e0[i] = embed_jacobi(phi_0, n, i).data;
  }
  std::map<unsigned, FracSeries> level;
  level[0] =
      promote_scalar<PoleFraction>(RatSeries::monomial(0, Rational(1), pe));
  for (int i = 0; i < n; ++i) {
    std::map<unsigned, FracSeries> next;
    unsigned low = (1u << (i + 1)) - 1;
    for (unsigned full : masks) {
      unsigned prefix = full & low;
      if (next.count(prefix)) continue;
      const FracSeries& prev = level.at(prefix & (low >> 1));
      next.emplace(prefix,
                   (prev * ((prefix >> i) & 1u ? em[i] : e0[i])).truncate(pe));
    }
    level = std::move(next);
  }
  return level;
}

RatSeries eis_monomial(const RatSeries& e4, const RatSeries& e6, int a,
                       int b) {
  RatSeries scalar = RatSeries::monomial(0, Rational(1), e4.prec24());
  for (int i = 0; i < a; ++i) scalar = scalar * e4;
  for (int i = 0; i < b; ++i) scalar = scalar * e6;
  return scalar;
}

}  // namespace

JacobiSolution solve_jacobi(int weight, int n, const JacobiConstraints& cons,
                            long prec24) {
  if (n < 1 || n > LaurentPoly::kMaxVars)
    throw std::invalid_argument("solve_jacobi variable count");
  long pe = std::max(prec24, 24L * (cons.n_sing + 1));

  std::vector<SolveMonomial> monos;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int k = __builtin_popcount(mask);
    int rem = weight + 2 * k;
    if (rem < 0) continue;
    for (int b = 0; 6 * b <= rem; ++b) {
      if ((rem - 6 * b) % 4 != 0) continue;
      monos.push_back({(rem - 6 * b) / 4, b, mask});
    }
  }
  JacobiSolution out;
  if (monos.empty()) return out;

  std::vector<unsigned> masks;
  for (const SolveMonomial& mono : monos) masks.push_back(mono.mask);
  std::map<unsigned, FracSeries> prods = mask_products(n, masks, pe);
  RatSeries e4 = eisenstein(4, pe), e6 = eisenstein(6, pe);

  std::vector<FracSeries> basis;
  basis.reserve(monos.size());
  for (const SolveMonomial& mono : monos) {
    RatSeries scalar = eis_monomial(e4, e6, mono.a, mono.b);
    FracSeries term =
        promote_scalar<PoleFraction>(scalar) * prods.at(mono.mask);
    basis.push_back(term.truncate(pe));
  }

  // Row space: one linear condition per constrained (q-exponent, zeta-key).
  struct RowKey {
    long e24;
    LaurentPoly::Key key;
    bool operator<(const RowKey& o) const {
      return e24 != o.e24 ? e24 < o.e24 : key < o.key;
    }
  };
  std::map<RowKey, Rational> targets;
  LaurentPoly probe(n);
  std::vector<int> zero(n, 0);
  LaurentPoly::Key zero_key = probe.pack(zero);

  auto key_norm = [&](LaurentPoly::Key key) {
    auto e = probe.unpack(key);
    Rational norm(0);
    for (int v : e) norm -= rat(static_cast<long>(v) * v, 16);
    return norm;  // caller adds the q-exponent
  };

  // Singular classes allowed by the q0 prescription: (norm, r mod 2) pairs.
  std::vector<std::pair<Rational, std::vector<int>>> allowed;
  if (cons.restrict_to_q0_singular_classes && cons.q0) {
    for (const auto& [key, c] : cons.q0->terms()) {
      Rational norm = key_norm(key);
      if (sgn(norm) >= 0) continue;
      auto e = probe.unpack(key);
      std::vector<int> cls(n);
      for (int i = 0; i < n; ++i) cls[i] = (((e[i] / 2) % 2) + 2) % 2;
      allowed.emplace_back(norm, std::move(cls));
    }
  }
  auto is_allowed_singular = [&](long e24, LaurentPoly::Key key) {
    Rational norm = rat(e24, 24) + key_norm(key);
    auto e = probe.unpack(key);
    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i) cls[i] = (((e[i] / 2) % 2) + 2) % 2;
    for (const auto& [anorm, acls] : allowed)
      if (anorm == norm && acls == cls) return true;
    return false;
  };

  for (std::size_t j = 0; j < basis.size(); ++j) {
    basis[j].for_each([&](long e24, const PoleFraction& pf) {
      if (e24 < 0 || e24 % 24 != 0)
        throw std::logic_error("unexpected basis support");
      long nq = e24 / 24;
      for (const auto& [key, c] : pf.as_poly().terms()) {
        if (nq == 0) {
          if (cons.q0) targets[{0, key}];  // value filled below
          else if (cons.c00 && key == zero_key) targets[{0, key}];
          else if (cons.kill_q0_other_r && key != zero_key)
            targets[{0, key}] = Rational(0);
        } else if (cons.apply_singular_vanishing && nq <= cons.n_sing) {
          Rational norm = rat(e24, 24) + key_norm(key);
          if (sgn(norm) < 0 && !is_allowed_singular(e24, key))
            targets[{e24, key}] = Rational(0);
        }
      }
    });
  }
  if (cons.q0) {
    for (const auto& [key, c] : cons.q0->terms()) targets[{0, key}] = c;
    for (auto& [rk, val] : targets)
      if (rk.e24 == 0) val = cons.q0->coeff(probe.unpack(rk.key));
  }
  if (cons.c00 && !cons.q0) targets[{0, zero_key}] = *cons.c00;

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> rhs;
  for (const auto& [rk, val] : targets) {
    std::vector<Rational> row(basis.size(), Rational(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const PoleFraction* pf = basis[j].peek(rk.e24);
      if (pf && !pf->is_zero())
        row[j] = pf->as_poly().coeff(probe.unpack(rk.key));
    }
    a.push_back(std::move(row));
    rhs.push_back(val);
  }

  LinearSolution lin = solve_exact(std::move(a), std::move(rhs));
  if (!lin.feasible) return out;
  out.feasible = true;
  auto combine = [&](const std::vector<Rational>& x) {
    FracSeries acc;
    acc = acc.truncate(prec24);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (sgn(x[j]) != 0) acc += basis[j] * x[j];
    return JacobiSeries{weight, n, 1, acc.truncate(prec24)};
  };
  out.particular = combine(lin.particular);
  for (const auto& dir : lin.nullspace) out.homogeneous.push_back(combine(dir));
  out.basis = std::move(monos);
  out.coeffs = std::move(lin.particular);
  out.null_coeffs = std::move(lin.nullspace);
  return out;
}

JacobiSeries assemble_jacobi(int weight, int n,
                             const std::vector<SolveMonomial>& basis,
                             const std::vector<Rational>& x, long prec24,
                             bool diagonal) {
  if (basis.size() != x.size())
    throw std::invalid_argument("coefficient count != basis size");
  RatSeries e4 = eisenstein(4, prec24), e6 = eisenstein(6, prec24);
  if (diagonal) {
    // All elliptic variables merged: the phi part depends only on how many
    // factors are phi_{-2,1}.
    std::vector<RatSeries> sums(n + 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (sgn(x[j]) == 0) continue;
      int k = __builtin_popcount(basis[j].mask);
      sums[k] = sums[k] + eis_monomial(e4, e6, basis[j].a, basis[j].b) * x[j];
    }
    JacobiSeries pm = phi_basic(-2, prec24), p0 = phi_basic(0, prec24);
    FracSeries acc;
    for (int k = 0; k <= n; ++k) {
      if (sums[k].is_zero()) continue;
      FracSeries term = promote_scalar<PoleFraction>(sums[k]);
      for (int i = 0; i < k; ++i) term = (term * pm.data).truncate(prec24);
      for (int i = k; i < n; ++i) term = (term * p0.data).truncate(prec24);
      acc += term;
    }
    return {weight, 1, n, acc.truncate(prec24)};
  }
  std::map<unsigned, RatSeries> scal;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (sgn(x[j]) == 0) continue;
    RatSeries& slot = scal[basis[j].mask];
    slot = slot + eis_monomial(e4, e6, basis[j].a, basis[j].b) * x[j];
  }
  std::vector<unsigned> masks;
  for (const auto& [mask, s] : scal) masks.push_back(mask);
  std::map<unsigned, FracSeries> prods = mask_products(n, masks, prec24);
  FracSeries acc;
  for (const auto& [mask, s] : scal)
    acc += promote_scalar<PoleFraction>(s) * prods.at(mask);
  return {weight, n, 1, acc.truncate(prec24)};
}

}  // namespace omf
