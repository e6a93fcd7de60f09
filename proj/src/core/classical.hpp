#pragma once

// Classical modular objects: Bernoulli numbers, Eisenstein series (E2
// included), Dedekind eta, the discriminant and j-invariant, the four
// Jacobi theta constants/functions, and the Weierstrass-p weight layers
// used by the index-raising operators. All precisions are exclusive e24
// exponents (q^(1/24) units).

#include "core/qseries.hpp"

namespace omf {

Rational bernoulli(int k);

// Normalized E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, k even, k >= 2.
RatSeries eisenstein(int k, long prec24);

// eta = q^(1/24) prod (1 - q^n), by the pentagonal-number expansion.
RatSeries dedekind_eta(long prec24);

RatSeries delta_series(long prec24);  // eta^24
RatSeries j_invariant(long prec24);   // E4^3 / delta, starts at q^{-1}

enum class Theta { k00, k01, k10, k11 };

// Theta function with one elliptic variable zeta.
PolySeries theta_series(Theta kind, long prec24);
// Value at zeta = 1 (identically zero for k11).
RatSeries theta_null(Theta kind, long prec24);

// (2 pi i)^{-2} wp as a q-series with pole-fraction coefficients:
// 1/12 + 1/D + sum_{n>=1} sum_{d|n} d (zeta^d - 2 + zeta^{-d}) q^n.
FracSeries wp_series(long prec24);
// (zeta d/dzeta)^order applied to wp_series.
FracSeries wp_layer(int order, long prec24);

}  // namespace omf
