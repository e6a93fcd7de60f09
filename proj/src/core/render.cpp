#include "core/render.hpp"

#include <numeric>

namespace omf {

namespace {

// Signed term strings assembled into "a + b - c" form.
std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (!parts[i].empty() && parts[i][0] == '-')
      out += " - " + parts[i].substr(1);
    else
      out += " + " + parts[i];
  }
  return out;
}

std::string coeff_times(const Rational& c, const std::string& mono) {
  std::string cs = Rational(c).get_str();
  if (mono.empty()) return cs;
  if (cs == "1") return mono;
  if (cs == "-1") return "-" + mono;
  return cs + "*" + mono;
}

// exp is doubled; base^(exp/2) in lowest terms.
std::string power_str(const std::string& base, int doubled) {
  if (doubled == 2) return base;
  if (doubled % 2 == 0) return base + "^" + std::to_string(doubled / 2);
  return base + "^(" + std::to_string(doubled) + "/2)";
}

std::string q_power(long e24) {
  if (e24 == 0) return "";
  long g = std::gcd(e24 < 0 ? -e24 : e24, 24L);
  long num = e24 / g, den = 24 / g;
  if (den == 1) return num == 1 ? "q" : "q^" + std::to_string(num);
  return "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::string prec_tail(long prec24) {
  if (prec24 >= RatSeries::kInfPrec) return "";
  std::string p = q_power(prec24);
  return "O(" + (p.empty() ? "1" : p) + ")";
}

}  // namespace

std::string render_rational(const Rational& r) { return Rational(r).get_str(); }

std::string render_laurent(const LaurentPoly& p) {
  // Graded lexicographic on the doubled exponent vectors.
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  for (const auto& [key, c] : p.terms()) terms.emplace_back(p.unpack(key), c);
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ta = std::accumulate(a.first.begin(), a.first.end(), 0);
    int tb = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (ta != tb) return ta < tb;
    return a.first < b.first;
  });
  std::vector<std::string> parts;
  for (const auto& [e, c] : terms) {
    std::string mono;
    for (int i = 0; i < p.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += power_str("zeta" + std::to_string(i + 1), e[i]);
    }
    parts.push_back(coeff_times(c, mono));
  }
  return join_terms(parts);
}

std::string render_polefrac(const PoleFraction& f) {
  if (f.is_polynomial()) return render_laurent(f.num());
  std::string den;
  for (int i = 0; i < f.nvars(); ++i) {
    int e = f.pole_orders()[i];
    if (e == 0) continue;
    if (!den.empty()) den += "*";
    den += "D" + std::to_string(i + 1);
    if (e > 1) den += "^" + std::to_string(e);
  }
  return "(" + render_laurent(f.num()) + ")/(" + den + ")";
}

std::string render_series(const RatSeries& s) {
  std::vector<std::string> parts;
  s.for_each([&](long e24, const Rational& c) {
    parts.push_back(coeff_times(c, q_power(e24)));
  });
  std::string tail = prec_tail(s.prec24());
  if (!tail.empty()) parts.push_back(tail);
  return join_terms(parts);
}

std::string render_series(const FracSeries& s) {
  std::vector<std::string> parts;
  s.for_each([&](long e24, const PoleFraction& c) {
    std::string qp = q_power(e24);
    std::string body = "(" + render_polefrac(c) + ")";
    parts.push_back(qp.empty() ? body : body + "*" + qp);
  });
  std::string tail = prec_tail(s.prec24());
  if (!tail.empty()) parts.push_back(tail);
  return join_terms(parts);
}

std::string render_jacobi(const JacobiSeries& j) {
  return "weight " + std::to_string(j.weight) + ", index scale " +
         std::to_string(j.index_scale) + ": " + render_series(j.data);
}

std::string render_fj(const FJSeries& f) {
  std::string out = "weight " + std::to_string(f.weight) + "\n";
  for (long m = 0; m < f.s_prec; ++m) {
    const JacobiSeries* l = f.layer(m);
    out += "s^" + std::to_string(m) + ": " +
           (l ? render_series(l->data) : "0") + "\n";
  }
  return out;
}

std::string render_report(const VerifyReport& rep) {
  std::string out = "== " + rep.suite + (rep.pass ? " PASS" : " FAIL") + "\n";
  for (const auto& c : rep.checks) {
    out += std::string("   ") + (c.pass ? "[ok] " : "[XX] ") + c.label;
    if (!c.detail.empty()) out += " | " + c.detail;
    out += "\n";
  }
  return out;
}

Json to_json(const Rational& r) { return Rational(r).get_str(); }

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [key, c] : p.terms())
    terms.push_back({p.unpack(key), Rational(c).get_str()});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

Json to_json(const PoleFraction& f) {
  return {{"num", to_json(f.num())}, {"poles", f.pole_orders()}};
}

Json to_json(const RatSeries& s) {
  Json terms = Json::array();
  s.for_each([&](long e24, const Rational& c) {
    terms.push_back({e24, Rational(c).get_str()});
  });
  return {{"off24", s.off24()}, {"prec24", s.prec24()}, {"terms", terms}};
}

Json to_json(const FracSeries& s) {
  Json terms = Json::array();
  s.for_each([&](long e24, const PoleFraction& c) {
    terms.push_back({e24, to_json(c)});
  });
  return {{"off24", s.off24()}, {"prec24", s.prec24()}, {"terms", terms}};
}

Json to_json(const JacobiSeries& j) {
  return {{"weight", j.weight},
          {"nvars", j.nvars},
          {"index_scale", j.index_scale},
          {"data", to_json(j.data)}};
}

Json to_json(const FJSeries& f) {
  Json layers = Json::array();
  for (const JacobiSeries& l : f.layers) layers.push_back(to_json(l));
  return {{"weight", f.weight},
          {"nvars", f.nvars},
          {"s_prec", f.s_prec},
          {"layers", layers}};
}

Json to_json(const VerifyReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back(
        {{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"suite", rep.suite}, {"pass", rep.pass}, {"checks", checks}};
}

Rational rational_from_json(const Json& j) {
  Rational r(j.get<std::string>());
  r.canonicalize();
  return r;
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p(j.at("nvars").get<int>());
  for (const auto& t : j.at("terms")) {
    std::vector<int> e = t.at(0).get<std::vector<int>>();
    p.add_term(e, rational_from_json(t.at(1)));
  }
  return p;
}

PoleFraction polefrac_from_json(const Json& j) {
  return PoleFraction(laurent_from_json(j.at("num")),
                      j.at("poles").get<std::vector<int>>());
}

RatSeries series_from_json(const Json& j) {
  RatSeries s(j.at("off24").get<long>(), j.at("prec24").get<long>());
  for (const auto& t : j.at("terms"))
    s.set(t.at(0).get<long>(), rational_from_json(t.at(1)));
  s.normalize();
  return s;
}

FracSeries frac_series_from_json(const Json& j) {
  FracSeries s(j.at("off24").get<long>(), j.at("prec24").get<long>());
  for (const auto& t : j.at("terms"))
    s.set(t.at(0).get<long>(), polefrac_from_json(t.at(1)));
  s.normalize();
  return s;
}

JacobiSeries jacobi_from_json(const Json& j) {
  return JacobiSeries{j.at("weight").get<int>(), j.at("nvars").get<int>(),
                      j.at("index_scale").get<int>(),
                      frac_series_from_json(j.at("data"))};
}

FJSeries fj_from_json(const Json& j) {
  FJSeries f;
  f.weight = j.at("weight").get<int>();
  f.nvars = j.at("nvars").get<int>();
  f.s_prec = j.at("s_prec").get<long>();
  for (const auto& l : j.at("layers")) f.layers.push_back(jacobi_from_json(l));
  return f;
}

}  // namespace omf
