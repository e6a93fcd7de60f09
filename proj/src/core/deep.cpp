#include "core/deep.hpp"

#include <stdexcept>

namespace omf {

namespace {

long binom5(int k) {
  long c = 1;
  for (int i = 0; i < k; ++i) c = c * (5 - i) / (i + 1);
  return c;
}

FJSeries eval_diag(const TableEntry& entry, const DiagonalSet& d,
                   bool skip_last = false) {
  FJSeries acc;
  bool first = true;
  std::size_t nterms = entry.terms.size() - (skip_last ? 1 : 0);
  for (std::size_t t = 0; t < nterms; ++t) {
    FJSeries v;
    bool inner = true;
    for (const auto& [name, pw] : entry.terms[t].powers) {
      const FJSeries& g = d.gen.at(name == "F4" ? "E4" : name);
      for (int i = 0; i < pw; ++i) {
        v = inner ? g : fj_mul(v, g);
        inner = false;
      }
    }
    v = fj_scale(v, entry.terms[t].coeff);
    acc = first ? std::move(v) : fj_add(acc, v);
    first = false;
  }
  return acc;
}

}  // namespace

DiagonalSet build_diagonal(long q_max, long s_max) {
  DiagonalSet d;
  d.q_max = q_max;
  d.s_max = s_max;
  long pe = 24 * (q_max * s_max + 1);
  long sp = s_max + 1;
  RatSeries delta = delta_series(pe);
  JacobiSeries pm = phi_basic(-2, pe), p0 = phi_basic(0, pe);
  for (int k = 0; k <= 5; ++k) {
    FracSeries prod =
        promote_scalar<PoleFraction>(delta * Rational(binom5(k)));
    for (int i = 0; i < k; ++i) prod = (prod * pm.data).truncate(pe);
    for (int i = 0; i < 5 - k; ++i) prod = (prod * p0.data).truncate(pe);
    JacobiSeries seed{12 - 2 * k, 1, 5, std::move(prod)};
    d.gen["chi" + std::to_string(12 - 2 * k)] =
        fj_truncate(gritsenko_lift(seed, sp), q_max + 1);
  }
  d.gen["E4"] = fj_scale(
      fj_truncate(gritsenko_lift(eisenstein_seed(4, pe, true), sp), q_max + 1),
      Rational(240));
  d.gen["E6"] = fj_scale(
      fj_truncate(gritsenko_lift(eisenstein_seed(6, pe, true), sp), q_max + 1),
      Rational(-504));
  {
    // Product part of the weight-6 pin, matching the five-variable build.
    const FJSeries& x2 = d.gen.at("chi2");
    const FJSeries& x4 = d.gen.at("chi4");
    FJSeries e6 = fj_add(d.gen.at("E6"),
                         fj_scale(fj_mul(x2, d.gen.at("E4")), Rational(7)));
    e6 = fj_add(e6, fj_scale(fj_mul(fj_mul(x2, x2), x2), Rational(-420)));
    e6 = fj_add(e6, fj_scale(fj_mul(x2, x4), Rational(42)));
    d.gen["E6"] = std::move(e6);
  }

  JacobiConstraints cons;
  cons.q0 = pole_basis(5, 0);
  cons.apply_singular_vanishing = true;
  cons.restrict_to_q0_singular_classes = true;
  JacobiSolution sol = solve_jacobi(2, 5, cons, 72);
  if (!sol.feasible)
    throw std::runtime_error("no weight-2 form with the prescribed q^0");
  JacobiSeries fd = assemble_jacobi(2, 5, sol.basis, sol.coeffs, pe, true);
  d.beta = fj_scale(fj_truncate(gritsenko_lift(fd, sp), q_max + 1),
                    Rational(12));
  return d;
}

VerifyReport verify_rank13_deep(long q_max, long s_max) {
  VerifyReport rep;
  rep.suite = "rank13-deep";
  DiagonalSet d = build_diagonal(q_max, s_max);
  RankTable table = build_table(13);
  FJSeries pw = eval_diag(*table.find("b2"), d);
  for (int k = 1; k <= 5; ++k) {
    pw = fj_mul(pw, d.beta);
    FJSeries lhs =
        fj_scale(pw, Rational((k % 2 ? -1 : 1) * binom5(k)));
    const TableEntry* entry = table.find("b" + std::to_string(2 + 2 * k));
    FJSeries rhs = eval_diag(*entry, d);
    rep.add({entry->label + " on the diagonal", fj_equal(lhs, rhs),
             "s^0..s^" + std::to_string(s_max) + ", q^0..q^" +
                 std::to_string(q_max)});
    if (k == 5) {
      FJSeries partial = eval_diag(*entry, d, true);
      const FJSeries& chi2 = d.gen.at("chi2");
      FJSeries c6 = chi2;
      for (int i = 1; i < 6; ++i) c6 = fj_mul(c6, chi2);
      bool coeff_ok = fj_equal(fj_sub(lhs, partial),
                               fj_scale(c6, entry->terms.back().coeff));
      rep.add({"chi2^6 coefficient -1523059200", coeff_ok,
               "difference of the sides is exactly that multiple"});
      rep.add({"negative control without chi2^6", !fj_equal(lhs, partial),
               "dropping the term breaks the deepest layer"});
    }
  }
  rep.finish();
  return rep;
}

}  // namespace omf
