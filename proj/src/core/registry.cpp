#include "core/registry.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace omf {

namespace {

ExpandResult from_series(std::string name, std::string note,
                         const RatSeries& s) {
  return {std::move(name), std::move(note), render_series(s), to_json(s)};
}

ExpandResult from_jacobi(std::string name, std::string note,
                         const JacobiSeries& j) {
  return {std::move(name), std::move(note), render_jacobi(j), to_json(j)};
}

ExpandResult from_fj(std::string name, std::string note, const FJSeries& f) {
  return {std::move(name), std::move(note), render_fj(f), to_json(f)};
}

FJSeries chi_lift(int weight, long q_max, long s_max) {
  long pe = 24 * (q_max * s_max + 1);
  JacobiSeries phi = phi_basic(weight == 10 ? -2 : 0, pe);
  JacobiSeries seed{weight, 1, 1,
                    (promote_scalar<PoleFraction>(delta_series(pe)) * phi.data)
                        .truncate(pe)};
  return fj_truncate(gritsenko_lift(seed, s_max + 1), q_max + 1);
}

JacobiSeries psi_rank17(long q_max) {
  long pp = 24 * (q_max + 3);
  RatSeries e4 = eisenstein(4, pp), e6 = eisenstein(6, pp);
  JacobiSeries phim = phi_basic(-2, pp), phi0 = phi_basic(0, pp);
  FracSeries e41 = ((promote_scalar<PoleFraction>(e4) * phi0.data) -
                    (promote_scalar<PoleFraction>(e6) * phim.data)) *
                   rat(1, 12);
  FracSeries e61 = ((promote_scalar<PoleFraction>(e6) * phi0.data) -
                    (promote_scalar<PoleFraction>(e4 * e4) * phim.data)) *
                   rat(1, 12);
  FracSeries data =
      ((promote_scalar<PoleFraction>(e4 * e4 * rat(29, 24)) * e41) +
       (promote_scalar<PoleFraction>(e6 * rat(19, 24)) * e61)) *
      promote_scalar<PoleFraction>(delta_series(pp).inverse());
  return JacobiSeries{0, 1, 1, data.truncate(24 * (q_max + 1))};
}

JacobiSeries f1_at(int n, long q_max) {
  JacobiConstraints cons;
  cons.q0 = pole_basis(n, 0);
  cons.apply_singular_vanishing = true;
  cons.restrict_to_q0_singular_classes = true;
  JacobiSolution sol = solve_jacobi(2, n, cons, 72);
  if (!sol.feasible) throw std::runtime_error("no weight-2 form");
  return assemble_jacobi(2, n, sol.basis, sol.coeffs, 24 * (q_max + 1));
}

using Builder = std::function<ExpandResult(long, long)>;

const std::map<std::string, Builder>& catalogue() {
  static const std::map<std::string, Builder> cat = {
      {"E4.L0",
       [](long q, long) {
         return from_series("E4.L0", "Eisenstein series of weight 4",
                            eisenstein(4, 24 * (q + 1)));
       }},
      {"E6.L0",
       [](long q, long) {
         return from_series("E6.L0", "Eisenstein series of weight 6",
                            eisenstein(6, 24 * (q + 1)));
       }},
      {"delta.L0",
       [](long q, long) {
         return from_series("delta.L0", "discriminant cusp form",
                            delta_series(24 * (q + 1)));
       }},
      {"j.L0",
       [](long q, long) {
         return from_series("j.L0", "modular j-invariant",
                            j_invariant(24 * (q + 1)));
       }},
      {"E2.level2.reference",
       [](long q, long) {
         long p = 24 * (q + 1);
         RatSeries e2 = eisenstein(2, p);
         return from_series("E2.level2.reference",
                            "weight-2 level-2 Eisenstein series 2E2(2t)-E2(t)",
                            e2.scale_variable(2) * Rational(2) - e2);
       }},
      {"chi10.L1",
       [](long q, long s) {
         return from_fj("chi10.L1", "lift of Delta phi_{-2,1}",
                        chi_lift(10, q, s));
       }},
      {"chi12.L1",
       [](long q, long s) {
         return from_fj("chi12.L1", "lift of Delta phi_{0,1}",
                        chi_lift(12, q, s));
       }},
      {"psi.rank17",
       [](long q, long) {
         return from_jacobi("psi.rank17",
                            "weakly holomorphic weight-0 input, principal "
                            "part 2/q",
                            psi_rank17(q));
       }},
      {"psi.n1",
       [](long q, long) {
         return from_jacobi("psi.n1", "weight-0 input with q^0 = D(zeta_1)",
                            psi_n(1, 24 * (q + 1)));
       }},
      {"psi.n2",
       [](long q, long) {
         return from_jacobi("psi.n2", "weight-0 input with q^0 = D(zeta_1)",
                            psi_n(2, 24 * (q + 1)));
       }},
      {"psi.n3",
       [](long q, long) {
         return from_jacobi("psi.n3", "weight-0 input with q^0 = D(zeta_1)",
                            psi_n(3, 24 * (q + 1)));
       }},
      {"f1.n2",
       [](long q, long) {
         return from_jacobi("f1.n2",
                            "weight-2 weak form, q^0 = zeta_1 - 2 + 1/zeta_1",
                            f1_at(2, q));
       }},
      {"table.rank15.b12",
       [](long q, long s) {
         GeneratorSet gs = build_generators(3, q, s, false);
         RankTable table = build_table(15);
         return from_fj("table.rank15.b12", "printed b12 entry, three "
                        "elliptic variables",
                        eval_entry(*table.find("b12"), gs));
       }},
      {"boundary.chi2",
       [](long q, long) {
         FracSeries s = boundary_chi(2, 24 * (q + 1));
         return ExpandResult{"boundary.chi2",
                             "level-two cusp expansion of the weight-2 form",
                             render_series(s), to_json(s)};
       }},
      {"boundary.chi4",
       [](long q, long) {
         FracSeries s = boundary_chi(4, 24 * (q + 1));
         return ExpandResult{"boundary.chi4",
                             "level-two cusp expansion of the weight-4 form",
                             render_series(s), to_json(s)};
       }},
  };
  return cat;
}

}  // namespace

std::vector<std::string> registry_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : catalogue()) names.push_back(name);
  return names;
}

ExpandResult expand_name(const std::string& name, long q_max, long s_max) {
  auto it = catalogue().find(name);
  if (it == catalogue().end()) {
    std::string msg = "unknown name " + name + "; catalogue:";
    for (const auto& n : registry_names()) msg += " " + n;
    throw std::invalid_argument(msg);
  }
  return it->second(q_max, s_max);
}

}  // namespace omf
