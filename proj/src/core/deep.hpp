#pragma once

// Deeper verification of the rank-13 factorization on the diagonal
// z_1 = ... = z_5. All five roots collapse to a single series beta, the
// generators become one-variable Jacobi forms of index 5, and the
// identities b_{2+2k} = (-1)^k binom(5, k) b_2 beta^k can be pushed to
// higher order in both q and s at negligible cost.

#include "core/vgs.hpp"

namespace omf {

// The diagonal generator and root series at the given inclusive orders.
struct DiagonalSet {
  long q_max = 0;
  long s_max = 0;
  std::map<std::string, FJSeries> gen;  // chi2..chi12, E4 (= F4), E6
  FJSeries beta;
};
DiagonalSet build_diagonal(long q_max, long s_max);

// Every b-entry of the rank-13 table on the diagonal, by direct evaluation
// against the printed coefficients, plus a negative control on the deepest
// layer (dropping the chi2^6 term must break the s^6 comparison).
VerifyReport verify_rank13_deep(long q_max, long s_max);

}  // namespace omf
