#pragma once

// Canonical text and JSON forms for every value the engine exposes.
// Text is deterministic: Laurent terms in graded lexicographic order of
// the elliptic exponents, series terms by ascending q-exponent, halves
// written as zeta1^(3/2) and fractional q-powers as q^(25/24). The pole
// factors D_i = zeta_i - 2 + zeta_i^{-1} print as D1, D2, ...

#include <string>

#include "core/lift.hpp"
#include "core/vgs.hpp"
#include "json.hpp"

namespace omf {

using Json = nlohmann::json;

std::string render_rational(const Rational& r);
std::string render_laurent(const LaurentPoly& p);
std::string render_polefrac(const PoleFraction& f);
std::string render_series(const RatSeries& s);
std::string render_series(const FracSeries& s);
std::string render_jacobi(const JacobiSeries& j);
// One line per Fourier-Jacobi layer, s^0 upward.
std::string render_fj(const FJSeries& f);
std::string render_report(const VerifyReport& rep);

// JSON forms round-trip exactly; equality of a fixture against a computed
// value can be checked on either side.
Json to_json(const Rational& r);
Json to_json(const LaurentPoly& p);
Json to_json(const PoleFraction& f);
Json to_json(const RatSeries& s);
Json to_json(const FracSeries& s);
Json to_json(const JacobiSeries& j);
Json to_json(const FJSeries& f);
Json to_json(const VerifyReport& rep);

Rational rational_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
PoleFraction polefrac_from_json(const Json& j);
RatSeries series_from_json(const Json& j);
FracSeries frac_series_from_json(const Json& j);
JacobiSeries jacobi_from_json(const Json& j);
FJSeries fj_from_json(const Json& j);

}  // namespace omf
