#pragma once

// Generator sets for the modular rings attached to the tower of lattices
// H + H + A1(-1)^n (n = 0..5), the printed Weierstrass coefficient tables,
// and the verification suites that confront those tables with exact
// Fourier-Jacobi expansions. Everything here is exact; a check passes only
// on literal equality of truncated series.

#include <map>
#include <string>
#include <vector>

#include "core/lift.hpp"

namespace omf {

// f(q) x g(s) without elliptic variables: layer m is f times the m-th
// coefficient of g.
FJSeries fj_tensor(const RatSeries& f, const RatSeries& g, int weight,
                   long s_prec);

// zeta_i = 1 on every layer.
FJSeries fj_restrict(const FJSeries& f, int i);

// Truncate every layer to the same exclusive integer q-order.
FJSeries fj_truncate(const FJSeries& f, long q_orders);

// All products prod_i in I phi_{-2,1}(z_i) prod_{i not in I} phi_{0,1}(z_i)
// summed over the subsets I of size j, for j = 0..n, built in one sweep.
std::vector<FracSeries> fk_products(int n, long prec24);

// Generators at n elliptic variables (rank 18 - n). q_max and s_max are
// inclusive: layers 0..s_max, each exact through q^{q_max}.
struct GeneratorSet {
  int n = 0;
  long q_max = 0;
  long s_max = 0;
  std::map<int, JacobiSeries> seeds;  // weight -> Delta times the weak seed
  std::map<int, FJSeries> chi;        // weight -> Gritsenko lift of the seed
  bool has_eis = false;
  FJSeries eis4, eis6;          // weight 4 and 6, constant coefficient 1
  std::vector<JacobiSeries> f;  // weight-2 forms with q^0 = D(zeta_j)
  std::vector<FJSeries> beta;   // 12 G(f_j)
  std::vector<SolveMonomial> f_basis;  // f_1 in the workbench basis
  std::vector<Rational> f_coeffs;
  int f_ambiguity = 0;
  int eis4_ambiguity = 0;
  int eis6_ambiguity = 0;
};

// The Weyl-symmetric holomorphic seed of weight 4 or 6 at five variables
// with constant coefficient 1. The solve leaves a one-dimensional cusp
// ambiguity (Delta times the symmetric phi products); it is pinned by two
// designated coefficients of the rank-13 factorization, which ties the
// seed to its level-5 paramodular restriction. With diagonal set the
// variables are merged into one of index 5. ambiguity, when non-null,
// receives the dimension of the cusp family.
JacobiSeries eisenstein_seed(int weight, long prec24, bool diagonal = false,
                             int* ambiguity = nullptr);

// The weight 4 and 6 forms come from eisenstein_seed at n = 5 and are
// carried down by restriction with the lift corrections of the tower;
// with_eis = false skips that chain.
GeneratorSet build_generators(int n, long q_max, long s_max,
                              bool with_eis = true);
std::vector<GeneratorSet> build_tower(int n_max, long q_max, long s_max);

// Printed Weierstrass coefficient tables. Generator names: E4, E6, F4,
// chi2..chi12; a term is coeff times a product of named powers.
struct TableTerm {
  Rational coeff;
  std::vector<std::pair<std::string, int>> powers;
};
struct TableEntry {
  std::string label;  // a4, a6, b2, ..., b12
  std::vector<TableTerm> terms;
};
struct RankTable {
  int rank = 0;
  std::vector<TableEntry> entries;
  const TableEntry* find(const std::string& label) const;
};
RankTable build_table(int rank);

FJSeries eval_term(const TableTerm& term, const GeneratorSet& gs);
FJSeries eval_entry(const TableEntry& entry, const GeneratorSet& gs);

struct IdentityCheck {
  std::string label;
  bool pass = false;
  std::string detail;  // first discrepancy, solved constants, notes
};
struct VerifyReport {
  std::string suite;
  bool pass = false;
  std::vector<IdentityCheck> checks;
  void add(IdentityCheck c);
  void finish();  // pass = conjunction of the checks
};

// Solve lhs = sum_i x_i monos_i coefficient-wise, then confirm the solved
// combination reproduces lhs exactly. Used to re-derive every printed
// constant rather than only confirming it.
struct MatchResult {
  bool feasible = false;
  bool exact = false;
  int ambiguity = 0;
  std::vector<Rational> solved;
  std::vector<std::vector<Rational>> nullspace;
};
MatchResult match_combination(const FJSeries& lhs,
                              const std::vector<FJSeries>& monos);

// B(t) = b_top prod (t - beta_j) against the printed table, with every
// constant re-solved from the series. rank in 13..17.
VerifyReport verify_rank(int rank, long q_max, long s_max);

// Degree-24 discriminant identity of the two-variable ring: the inner
// factor of D equals a constant times Delta^2 x Delta^2 (j - j')^2, with a
// negative control dropping a6.
VerifyReport verify_rank18_bivariate(long orders);

// res(chi_lowest) = 0 and res(chi_k) = 12 chi_k for every adjacent pair of
// the tower, layer by layer, plus the endpoints of the weight 4/6 chain.
VerifyReport verify_restrictions(long q_max, long s_max);

// The rank-17 weakly holomorphic input psi, its Borcherds product, and
// B(psi_n) against G(Delta f_n) for n = 1..5.
VerifyReport verify_psi_and_products(long q_max, long s_max, int n_top = 5);

// Weight-0 forms with q^0 = D(zeta_i) D(zeta_j) at n = 3: Borcherds
// divisor orders and proportionality of B(b_ij) to beta_i - beta_j.
VerifyReport verify_root_differences(long q_max, long s_max);

// Structural properties: V_1 is the identity, Delta | V_2 eigenvalue data,
// elliptic invariance of constructed layers, psi_n divisor orders, pole
// cancellation in the assembled tables.
VerifyReport verify_properties(long q_max, long s_max);

// Boundary expansions at the level-two cusp of the H + H(2) + D4(-1) ring:
// the weight 2 and weight 4 Weierstrass combinations (k = 2 or 4).
FracSeries boundary_chi(int k, long prec24);
VerifyReport verify_boundary();

}  // namespace omf
