#pragma once

// Jacobi forms of lattice index A1^n (scaled): basic generators, external
// products, Weyl-symmetric sums, theta-quotient weak forms, index-raising
// Hecke operators including the V_0 boundary layer, holomorphy
// classification, restriction, and an exact linear workbench for forms with
// prescribed coefficients.

#include <optional>
#include <vector>

#include "core/classical.hpp"
#include "core/qseries.hpp"

namespace omf {

struct JacobiSeries {
  int weight = 0;
  int nvars = 0;
  int index_scale = 1;  // per-variable index (0 for V_0 layers)
  FracSeries data;      // q-series with coefficients in the elliptic variables

  bool is_zero() const { return data.is_zero(); }
  // q^0 Laurent coefficient; zero polynomial when absent, throws on a pole.
  LaurentPoly q0() const;
};

JacobiSeries jac_add(const JacobiSeries& a, const JacobiSeries& b);
JacobiSeries jac_sub(const JacobiSeries& a, const JacobiSeries& b);
JacobiSeries jac_mul(const JacobiSeries& a, const JacobiSeries& b);
JacobiSeries jac_scale(const JacobiSeries& a, const Rational& s);
bool jac_equal(const JacobiSeries& a, const JacobiSeries& b);

// phi_{-2,1} = theta_11^2 / eta^6 or phi_{0,1} = 12 * wp * phi_{-2,1}
// (kind = -2 or 0); one variable, index 1, exact to prec24.
JacobiSeries phi_basic(int kind, long prec24);

// Send a one-variable form's zeta to zeta_i in an nvars-variable ring.
JacobiSeries embed_jacobi(const JacobiSeries& f, int nvars, int i);

// parts[i] becomes the z_{i+1}-factor; scalar is a plain q-series factor
// of the given weight (e.g. E4^a E6^b or Delta). Zero parts allowed.
JacobiSeries external_product(const std::vector<JacobiSeries>& parts,
                              const RatSeries& scalar, int scalar_weight);

// f_k = sum over k-subsets I of prod_{i in I} phi_{-2,1}(z_i) times
// prod_{i not in I} phi_{0,1}(z_i); weight -2k, index A1^n.
JacobiSeries fk_symmetric(int n, int k, long prec24);

// The weight-0 weak form psi_n built from even theta quotients over
// 2 sqrt(Delta); psi_1 = 2 phi_{0,1}.
JacobiSeries psi_n(int n, long prec24);

// Index-raising operator: for N >= 1 the coefficient rule
// c'(n, r) = sum_{d | (n, r, N)} d^{k-1} c(Nn/d^2, r/d); N = 0 gives the
// boundary layer (Eisenstein term for weight >= 4 plus Weierstrass layers
// for the nonzero c(0, r), which must sit on unit vectors).
JacobiSeries hecke_v(const JacobiSeries& f, long N);

struct SingularEntry {
  long n_exp;          // q-exponent in integer units
  std::vector<int> r;  // integer elliptic exponents
  Rational coeff;
  Rational norm;       // n - sum r_i^2 / (4m), negative here
};
struct SingularReport {
  std::vector<SingularEntry> entries;
  bool is_weak = false;
  bool is_holomorphic = false;
  bool is_cusp = false;
};
SingularReport classify(const JacobiSeries& f);

struct JacobiConstraints {
  std::optional<LaurentPoly> q0;  // full q^0 prescription (nvars variables)
  bool kill_q0_other_r = false;   // c(0, r) = 0 for r != 0
  std::optional<Rational> c00;    // prescribe c(0, 0) alone
  int n_sing = 2;                 // singular vanishing horizon (q^1..q^n_sing)
  bool apply_singular_vanishing = false;
  // With a prescribed q0: only forbid singular classes (norm, r mod 2m) that
  // do not already occur among the q0 prescription's singular terms.
  bool restrict_to_q0_singular_classes = false;
};
// One basis monomial E4^a E6^b prod_i phi_{eps_i,1}(z_i); bit i of mask set
// means phi_{-2,1} in variable i, clear means phi_{0,1}.
struct SolveMonomial {
  int a = 0;
  int b = 0;
  unsigned mask = 0;
};

struct JacobiSolution {
  bool feasible = false;
  JacobiSeries particular;
  std::vector<JacobiSeries> homogeneous;  // ambiguity directions
  std::vector<SolveMonomial> basis;
  std::vector<Rational> coeffs;  // particular solution in the basis
  std::vector<std::vector<Rational>> null_coeffs;
};

// Solve for weight-w n-variable weak forms in the monomial basis
// E4^a E6^b prod_i phi_{eps_i,1}(z_i) under the given linear constraints.
JacobiSolution solve_jacobi(int weight, int n, const JacobiConstraints& cons,
                            long prec24);

// Rebuild sum_j x_j E4^a E6^b prod_i phi_{eps_i,1}(z_i) at a fresh
// precision. With diagonal set, every z_i is merged into a single elliptic
// variable and the result has one variable of index n.
JacobiSeries assemble_jacobi(int weight, int n,
                             const std::vector<SolveMonomial>& basis,
                             const std::vector<Rational>& x, long prec24,
                             bool diagonal = false);

// zeta_i = 1; weight preserved, one variable fewer.
JacobiSeries restrict_var(const JacobiSeries& f, int i);

// Checks c(n, r) = c(n + r_i + m, r + 2m e_i) for lambda = +-e_i within
// truncation (the elliptic-invariance coefficient identity).
bool elliptic_invariant(const JacobiSeries& f);

// Exact dense linear algebra over the rationals, shared by the workbench
// and verification suites. Solves A x = rhs; reports feasibility and the
// nullspace of A.
struct LinearSolution {
  bool feasible = false;
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> nullspace;
};
LinearSolution solve_exact(std::vector<std::vector<Rational>> a,
                           std::vector<Rational> rhs);

}  // namespace omf
