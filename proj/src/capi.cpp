#include "omf.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "core/deep.hpp"
#include "core/registry.hpp"
#include "core/sympoly.hpp"

struct omf_value {
  omf::ExpandResult result;
  std::string json_text;
};

struct omf_report {
  omf::VerifyReport report;
  std::string text;
  std::string json_text;
};

namespace {

thread_local std::string g_last_error;

template <class F>
omf_status guarded(F&& f) {
  try {
    f();
    return OMF_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return OMF_ERR_INVALID;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return OMF_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OMF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

struct SuiteSpec {
  const char* name;
  long q_default;
  long s_default;
  omf::VerifyReport (*run)(long, long);
};

omf::VerifyReport run_symbolic(long, long) {
  omf::VerifyReport all;
  all.suite = "symbolic";
  for (omf::VerifyReport part : {omf::verify_discriminant_factorizations(),
                                 omf::verify_table7_symmetric(),
                                 omf::verify_substitution_algebra()})
    for (omf::IdentityCheck& c : part.checks) all.add(std::move(c));
  all.finish();
  return all;
}

const SuiteSpec kSuites[] = {
    {"rank13", 2, 3, [](long q, long s) { return omf::verify_rank(13, q, s); }},
    {"rank14", 3, 3, [](long q, long s) { return omf::verify_rank(14, q, s); }},
    {"rank15", 4, 3, [](long q, long s) { return omf::verify_rank(15, q, s); }},
    {"rank16", 4, 3, [](long q, long s) { return omf::verify_rank(16, q, s); }},
    {"rank17", 4, 3, [](long q, long s) { return omf::verify_rank(17, q, s); }},
    {"rank18", 6, 6,
     [](long q, long) { return omf::verify_rank18_bivariate(q); }},
    {"deep", 6, 6,
     [](long q, long s) { return omf::verify_rank13_deep(q, s); }},
    {"restrictions", 3, 3,
     [](long q, long s) { return omf::verify_restrictions(q, s); }},
    {"borcherds", 4, 3,
     [](long q, long s) { return omf::verify_psi_and_products(q, s); }},
    {"root-differences", 3, 3,
     [](long q, long s) { return omf::verify_root_differences(q, s); }},
    {"properties", 3, 3,
     [](long q, long s) { return omf::verify_properties(q, s); }},
    {"boundary", 4, 3, [](long, long) { return omf::verify_boundary(); }},
    {"symbolic", 0, 0, run_symbolic},
};

}  // namespace

extern "C" {

const char* omf_last_error(void) { return g_last_error.c_str(); }

omf_status omf_catalogue(char** out) {
  return guarded([&] {
    std::string all;
    for (const std::string& n : omf::registry_names()) {
      if (!all.empty()) all += "\n";
      all += n;
    }
    *out = dup_string(all);
  });
}

void omf_string_free(char* s) { std::free(s); }

omf_status omf_expand(const char* name, long q_max, long s_max,
                      omf_value** out) {
  return guarded([&] {
    if (!name || !out) throw std::invalid_argument("null argument");
    auto* v = new omf_value{omf::expand_name(name, q_max, s_max), {}};
    v->json_text = v->result.json.dump(2);
    *out = v;
  });
}

const char* omf_value_name(const omf_value* v) {
  return v->result.name.c_str();
}
const char* omf_value_note(const omf_value* v) {
  return v->result.note.c_str();
}
const char* omf_value_text(const omf_value* v) {
  return v->result.text.c_str();
}
const char* omf_value_json(const omf_value* v) { return v->json_text.c_str(); }
void omf_value_free(omf_value* v) { delete v; }

omf_status omf_verify(const char* suite, long q_max, long s_max,
                      omf_report** out) {
  return guarded([&] {
    if (!suite || !out) throw std::invalid_argument("null argument");
    for (const SuiteSpec& spec : kSuites) {
      if (std::strcmp(spec.name, suite) != 0) continue;
      long q = q_max > 0 ? q_max : spec.q_default;
      long s = s_max > 0 ? s_max : spec.s_default;
      auto* r = new omf_report{spec.run(q, s), {}, {}};
      r->text = omf::render_report(r->report);
      r->json_text = omf::to_json(r->report).dump(2);
      *out = r;
      return;
    }
    std::string msg = std::string("unknown suite ") + suite + "; suites:";
    for (const SuiteSpec& spec : kSuites) msg += std::string(" ") + spec.name;
    throw std::invalid_argument(msg);
  });
}

omf_status omf_suites(char** out) {
  return guarded([&] {
    std::string all;
    for (const SuiteSpec& spec : kSuites) {
      if (!all.empty()) all += "\n";
      all += spec.name;
    }
    *out = dup_string(all);
  });
}

omf_status omf_bench(char** json_out) {
  return guarded([&] {
    using Clock = std::chrono::steady_clock;
    omf::Json runs = omf::Json::array();
    auto timed = [&](const std::string& name, auto&& work) {
      auto start = Clock::now();
      std::size_t count = work();
      double ms = std::chrono::duration<double, std::milli>(Clock::now() -
                                                            start)
                      .count();
      runs.push_back({{"name", name}, {"ms", ms}, {"coefficients", count}});
    };
    for (long prec : {48L, 96L}) {
      timed("laurent-product-5var-q" + std::to_string(prec / 24), [&] {
        omf::JacobiSeries f = omf::fk_symmetric(5, 2, prec);
        omf::FracSeries sq = (f.data * f.data).truncate(prec);
        std::size_t count = 0;
        sq.for_each([&](long, const omf::PoleFraction& c) {
          count += c.num().term_count();
        });
        return count;
      });
    }
    timed("hecke-batch-n2", [&] {
      omf::JacobiSeries f = omf::psi_n(2, 24 * 5);
      std::size_t count = 0;
      for (int m = 1; m <= 3; ++m) {
        omf::JacobiSeries v = omf::hecke_v(f, m);
        v.data.for_each([&](long, const omf::PoleFraction& c) {
          count += c.num().term_count();
        });
      }
      return count;
    });
    *json_out = dup_string(omf::Json{{"workloads", runs}}.dump(2));
  });
}

int omf_report_pass(const omf_report* r) { return r->report.pass ? 1 : 0; }
size_t omf_report_size(const omf_report* r) { return r->report.checks.size(); }
const char* omf_report_label(const omf_report* r, size_t i) {
  return r->report.checks.at(i).label.c_str();
}
int omf_report_check_pass(const omf_report* r, size_t i) {
  return r->report.checks.at(i).pass ? 1 : 0;
}
const char* omf_report_detail(const omf_report* r, size_t i) {
  return r->report.checks.at(i).detail.c_str();
}
const char* omf_report_text(const omf_report* r) { return r->text.c_str(); }
const char* omf_report_json(const omf_report* r) {
  return r->json_text.c_str();
}
void omf_report_free(omf_report* r) { delete r; }

}  // extern "C"
