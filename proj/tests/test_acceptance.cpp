// End-to-end acceptance run. Thirteen criteria, one line each, exact
// equality throughout; the binary exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "core/deep.hpp"
#include "core/sympoly.hpp"

namespace {

using omf::Rational;
using omf::RatSeries;

int g_failures = 0;

template <class F>
void criterion(int number, const char* title, F&& body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string note;
  try {
    pass = body(note);
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
                   .count();
  std::printf("[%s] %2d. %-58s %7.1fs%s%s\n", pass ? "PASS" : "FAIL", number,
              title, sec, note.empty() ? "" : "  ", note.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

bool report_ok(const omf::VerifyReport& rep, std::string& note) {
  for (const omf::IdentityCheck& c : rep.checks)
    if (!c.pass) {
      note = "first failure: " + c.label;
      return false;
    }
  return rep.pass;
}

// sum of d^k over divisors d of n
Rational sigma(long k, long n) {
  Rational s(0);
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      Rational p(1);
      for (long i = 0; i < k; ++i) p *= Rational(d);
      s += p;
    }
  return s;
}

bool classical_layer(std::string& note) {
  long p = 24 * 21;
  RatSeries e4 = omf::eisenstein(4, p), e6 = omf::eisenstein(6, p);
  RatSeries delta = omf::delta_series(p);
  for (long n = 0; n <= 20; ++n) {
    Rational oe4 = n == 0 ? Rational(1) : Rational(240) * sigma(3, n);
    Rational oe6 = n == 0 ? Rational(1) : Rational(-504) * sigma(5, n);
    if (e4.get(24 * n) != oe4 || e6.get(24 * n) != oe6) {
      note = "Eisenstein mismatch at q^" + std::to_string(n);
      return false;
    }
  }
  // eta product recomputed with a naive polynomial loop
  std::vector<Rational> eta24(21, Rational(0));
  eta24[0] = Rational(1);
  for (long n = 1; n <= 20; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (long i = 20; i >= n; --i) eta24[i] -= eta24[i - n];
  for (long n = 0; n <= 19; ++n)
    if (delta.get(24 * (n + 1)) != eta24[n]) {
      note = "eta product mismatch at q^" + std::to_string(n + 1);
      return false;
    }
  RatSeries j = omf::j_invariant(p);
  if (j.get(-24) != Rational(1) || j.get(0) != Rational(744) ||
      j.get(24) != Rational(196884)) {
    note = "j-invariant leading coefficients";
    return false;
  }
  RatSeries t00 = omf::theta_null(omf::Theta::k00, p);
  RatSeries t01 = omf::theta_null(omf::Theta::k01, p);
  RatSeries t10 = omf::theta_null(omf::Theta::k10, p);
  if (!(t00.pow(4) == t01.pow(4) + t10.pow(4))) {
    note = "theta fourth-power identity";
    return false;
  }
  if (!(e4.pow(3) - e6.pow(2) == delta * Rational(1728))) {
    note = "E4^3 - E6^2 = 1728 Delta";
    return false;
  }
  return true;
}

bool rank0_borcherds(std::string& note) {
  long p = 24 * 45;
  RatSeries psi = omf::j_invariant(p) * Rational(2) -
                  RatSeries::monomial(0, Rational(1440), RatSeries::kInfPrec);
  if (psi.get(-24) != Rational(2) || psi.get(0) != Rational(48) ||
      psi.get(24) != Rational(393768)) {
    note = "input is not 2/q + 48 + 393768 q + ...";
    return false;
  }
  omf::BiQSeries f = omf::borcherds_rank0(psi, 5, 5);
  long tp = 24 * 10;
  RatSeries j = omf::j_invariant(tp);
  RatSeries d2 = omf::delta_series(tp).pow(2);
  omf::BiQSeries jdiff = omf::tensor_left(j) - omf::tensor_right(j);
  omf::BiQSeries target =
      omf::tensor_left(d2) * omf::tensor_right(d2) * jdiff * jdiff;
  if (!(f == target)) {
    note = "product differs from Delta^2 x Delta'^2 (j - j')^2";
    return false;
  }
  return true;
}

std::string extract_detail(const omf::VerifyReport& rep,
                           const std::string& label_part) {
  for (const omf::IdentityCheck& c : rep.checks)
    if (c.label.find(label_part) != std::string::npos) return c.detail;
  return "";
}

}  // namespace

int main() {
  criterion(1, "classical oracles and identities through q^20",
            classical_layer);
  criterion(2, "2j - 1440 input and its rank-0 Borcherds square",
            rank0_borcherds);
  criterion(3, "rank-18 degree-24 discriminant identity, bi-order 5",
            [](std::string& note) {
              omf::VerifyReport rep = omf::verify_rank18_bivariate(6);
              note = extract_detail(rep, "discriminant factor");
              std::string why;
              return report_ok(rep, why) || (note = why, false);
            });
  criterion(4, "rank-17 input psi and the leading Borcherds layers",
            [](std::string& note) {
              return report_ok(omf::verify_psi_and_products(4, 3, 0), note);
            });
  criterion(5, "B(psi_n) = kappa_n G(Delta f_n), n = 1..5",
            [](std::string& note) {
              omf::VerifyReport rep = omf::verify_psi_and_products(4, 3, 5);
              bool ok = true;
              for (const omf::IdentityCheck& c : rep.checks)
                if (c.label.rfind("B(psi_", 0) == 0 && !c.pass) {
                  ok = false;
                  note = "first failure: " + c.label;
                }
              return ok;
            });
  criterion(6, "restriction suite down the tower with endpoints",
            [](std::string& note) {
              return report_ok(omf::verify_restrictions(3, 3), note);
            });
  criterion(7, "rank-16 table from b8 (t - beta_1)(t - beta_2)",
            [](std::string& note) {
              return report_ok(omf::verify_rank(16, 4, 3), note);
            });
  criterion(8, "rank-15 table including the s^2-layer identity",
            [](std::string& note) {
              return report_ok(omf::verify_rank(15, 4, 3), note);
            });
  criterion(9, "rank-14 table with the pinned weight-4 form",
            [](std::string& note) {
              omf::VerifyReport rep = omf::verify_rank(14, 3, 3);
              std::string lambda = extract_detail(rep, "a6");
              std::string why;
              bool ok = report_ok(rep, why);
              note = ok ? lambda : why;
              return ok;
            });
  criterion(10, "rank-13 table at five elliptic variables",
            [](std::string& note) {
              return report_ok(omf::verify_rank(13, 2, 3), note);
            });
  criterion(10, "rank-13 deep diagonal with the chi2^6 coefficient",
            [](std::string& note) {
              return report_ok(omf::verify_rank13_deep(6, 6), note);
            });
  criterion(11, "symbolic discriminants, quintic root data, base change",
            [](std::string& note) {
              for (omf::VerifyReport rep :
                   {omf::verify_discriminant_factorizations(),
                    omf::verify_table7_symmetric(),
                    omf::verify_substitution_algebra()})
                if (!report_ok(rep, note)) return false;
              return true;
            });
  criterion(12, "level-two boundary expansions through q^4",
            [](std::string& note) {
              return report_ok(omf::verify_boundary(), note);
            });
  criterion(13, "structural property suite", [](std::string& note) {
    return report_ok(omf::verify_properties(3, 3), note);
  });

  if (g_failures) std::printf("%d criterion(s) FAILED\n", g_failures);
  return g_failures ? 1 : 0;
}
