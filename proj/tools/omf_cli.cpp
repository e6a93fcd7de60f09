// Command-line front end for the exact modular-form engine. Talks to the
// engine exclusively through the C API in omf.h; exit codes are 0 for
// success, 1 for a verification or fixture mismatch, 2 for usage errors.

#include <omf.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

// Wraps a C string the API asked us to free.
struct ApiString {
  char* s = nullptr;
  ~ApiString() { omf_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

int fail_with_api_error(const char* what) {
  std::cerr << "omf " << what << ": " << omf_last_error() << "\n";
  return 2;
}

int run_expand(const std::string& name, long q_prec, long s_prec, bool as_json,
               const std::string& fixtures_dir) {
  omf_value* v = nullptr;
  omf_status st = omf_expand(name.c_str(), q_prec, s_prec, &v);
  if (st != OMF_OK) return fail_with_api_error("expand");

  std::string json_text = omf_value_json(v);
  if (!fixtures_dir.empty()) {
    std::string path = fixtures_dir + "/" + name + ".json";
    std::ifstream in(path);
    if (in) {
      nlohmann::json expected = nlohmann::json::parse(in);
      nlohmann::json actual = nlohmann::json::parse(json_text);
      if (expected != actual) {
        std::cerr << "omf expand: " << name << " does not match fixture "
                  << path << "\n";
        omf_value_free(v);
        return 1;
      }
      std::cout << name << ": matches fixture " << path << "\n";
    } else {
      std::ofstream out(path);
      if (!out) {
        std::cerr << "omf expand: cannot write fixture " << path << "\n";
        omf_value_free(v);
        return 2;
      }
      out << json_text << "\n";
      std::cout << name << ": wrote fixture " << path << "\n";
    }
    omf_value_free(v);
    return 0;
  }

  if (as_json) {
    std::cout << json_text << "\n";
  } else {
    std::cout << omf_value_name(v) << "  (" << omf_value_note(v) << ")\n"
              << omf_value_text(v) << "\n";
  }
  omf_value_free(v);
  return 0;
}

int run_verify(std::vector<std::string> suites, long q_prec, long s_prec,
               bool deep, bool as_json, unsigned threads) {
  if (suites.size() == 1 && suites[0] == "all") {
    ApiString names;
    if (omf_suites(&names.s) != OMF_OK) return fail_with_api_error("verify");
    suites.clear();
    std::istringstream in(names.str());
    for (std::string line; std::getline(in, line);)
      if (!line.empty() && line != "deep") suites.push_back(line);
  }
  if (deep) {
    bool has13 = false;
    for (const std::string& s : suites) has13 = has13 || s == "rank13";
    if (!has13) {
      std::cerr << "omf verify: --deep requires the rank13 suite\n";
      return 2;
    }
    suites.push_back("deep");
  }

  struct Slot {
    omf_report* report = nullptr;
    omf_status status = OMF_OK;
    std::string error;
  };
  std::vector<Slot> slots(suites.size());
  std::mutex next_mutex;
  std::size_t next = 0;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(next_mutex);
        if (next >= suites.size()) return;
        i = next++;
      }
      slots[i].status =
          omf_verify(suites[i].c_str(), q_prec, s_prec, &slots[i].report);
      if (slots[i].status != OMF_OK) slots[i].error = omf_last_error();
    }
  };
  if (threads > 1 && suites.size() > 1) {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  } else {
    worker();
  }

  bool all_pass = true;
  nlohmann::json results = nlohmann::json::array();
  for (std::size_t i = 0; i < suites.size(); ++i) {
    if (slots[i].status != OMF_OK) {
      std::cerr << "omf verify: " << slots[i].error << "\n";
      return 2;
    }
    omf_report* r = slots[i].report;
    all_pass = all_pass && omf_report_pass(r);
    if (as_json)
      results.push_back(nlohmann::json::parse(omf_report_json(r)));
    else
      std::cout << omf_report_text(r) << "\n";
    omf_report_free(r);
  }
  if (as_json) std::cout << results.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

int run_bench(bool as_json) {
  ApiString out;
  if (omf_bench(&out.s) != OMF_OK) return fail_with_api_error("bench");
  if (as_json) {
    std::cout << out.str() << "\n";
    return 0;
  }
  nlohmann::json doc = nlohmann::json::parse(out.str());
  for (const auto& w : doc.at("workloads"))
    std::printf("%-28s %10.2f ms  %8llu coefficients\n",
                w.at("name").get<std::string>().c_str(),
                w.at("ms").get<double>(),
                static_cast<unsigned long long>(
                    w.at("coefficients").get<std::size_t>()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for lattice-index Jacobi forms and their lifts"};
  app.require_subcommand(1);

  std::string name;
  long q_prec = 4, s_prec = 3;
  bool as_json = false;
  std::string fixtures_dir;
  CLI::App* expand = app.add_subcommand("expand", "print a catalogued form");
  expand->add_option("name", name, "form to expand")->required();
  expand->add_option("--q-prec", q_prec, "inclusive q order");
  expand->add_option("--s-prec", s_prec, "inclusive s order");
  expand->add_flag("--json", as_json, "emit JSON");
  expand->add_option("--fixtures", fixtures_dir,
                     "compare against DIR/<name>.json, writing it if absent");

  std::vector<std::string> suites;
  long vq = 0, vs = 0;
  bool vjson = false, deep = false;
  unsigned threads = 1;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suites", suites, "suite names, or \"all\"")->required();
  verify->add_option("--q-prec", vq, "inclusive q order (0 = suite default)");
  verify->add_option("--s-prec", vs, "inclusive s order (0 = suite default)");
  verify->add_flag("--deep", deep, "append the deep rank13 checks");
  verify->add_flag("--json", vjson, "emit JSON");
  verify->add_option("--threads", threads, "suites run in parallel");

  bool bjson = false;
  CLI::App* bench = app.add_subcommand("bench", "time representative work");
  bench->add_flag("--json", bjson, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  if (expand->parsed())
    return run_expand(name, q_prec, s_prec, as_json, fixtures_dir);
  if (verify->parsed())
    return run_verify(suites, vq, vs, deep, vjson, threads);
  return run_bench(bjson);
}
