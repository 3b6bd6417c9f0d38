// Command-line front end. Talks to the library only through chw.h.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chw/chw.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Error carrying the exit code for usage and input problems.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ReportPtr = std::unique_ptr<chw_report, decltype(&chw_report_free)>;

void check(chw_status s) {
  if (s != CHW_OK) throw UsageError(chw_last_error());
}

int emit(chw_report* raw, bool json) {
  ReportPtr r(raw, chw_report_free);
  std::cout << (json ? chw_report_json(r.get()) : chw_report_text(r.get()));
  if (json) std::cout << "\n";
  return chw_report_pass(r.get()) ? kExitPass : kExitFail;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::uint64_t need_seed(const std::optional<std::uint64_t>& seed) {
  if (!seed) throw UsageError("this suite is randomized and needs --seed");
  return *seed;
}

const char* opt_cstr(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

// "--y 2" selects y_2; "--y 1,-1" gives coordinates.
std::vector<std::string> cartan_coordinates(const std::string& y, int n) {
  std::vector<std::string> out;
  if (y.find(',') == std::string::npos) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(y, &used);
      if (used != y.size()) throw std::invalid_argument(y);
    } catch (const std::exception&) {
      throw UsageError("--y must be an index 1..n or a comma-separated coordinate list");
    }
    if (k < 1 || k > n) throw UsageError("--y index out of range 1..n");
    for (int i = 1; i <= n; ++i) out.push_back(i == k ? "1" : "0");
    return out;
  }
  std::stringstream ss(y);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

struct Options {
  bool json = false;
  int n = 0;
  int m = 0;
  std::string group;
  std::string kappa = "formal";
  std::optional<std::string> c;
  std::optional<std::string> file;
  std::optional<std::string> poly;
  std::optional<std::string> points;
  std::string y;
  std::string model = "additive";
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  int conjugations = 20;
  int max_degree = 6;
  bool freeness = false;
};

int run_dunkl(const Options& o) {
  chw_poly* f = nullptr;
  check(chw_poly_parse(o.poly->c_str(), o.n, o.group.c_str(), &f));
  std::unique_ptr<chw_poly, decltype(&chw_poly_free)> fp(f, chw_poly_free);
  std::vector<std::string> coords = cartan_coordinates(o.y, o.n);
  std::vector<const char*> ptrs;
  for (const auto& s : coords) ptrs.push_back(s.c_str());
  chw_poly* g = nullptr;
  check(chw_dunkl_apply(f, ptrs.data(), static_cast<int>(ptrs.size()), o.kappa.c_str(), &g));
  std::unique_ptr<chw_poly, decltype(&chw_poly_free)> gp(g, chw_poly_free);
  char* text = nullptr;
  check(chw_poly_to_string(g, &text));
  std::string result = text;
  chw_string_free(text);
  if (o.json) {
    std::cout << "{\n  \"n\": " << o.n << ",\n  \"kappa\": \"" << o.kappa << "\",\n  \"result\": \"" << result
              << "\"\n}\n";
  } else {
    std::cout << result << "\n";
  }
  return kExitPass;
}

int run_springer(const Options& o) {
  if (o.m > 0) {
    chw_report* r = nullptr;
    check(chw_springer(o.n, o.m, &r));
    return emit(r, o.json);
  }
  // Every m in 1..n, one document.
  bool all_pass = true;
  std::ostringstream body;
  for (int m = 1; m <= o.n; ++m) {
    chw_report* raw = nullptr;
    check(chw_springer(o.n, m, &raw));
    ReportPtr r(raw, chw_report_free);
    all_pass = all_pass && chw_report_pass(r.get());
    if (o.json) {
      std::string doc = chw_report_json(r.get());
      std::string indented;
      for (char ch : doc) {
        indented += ch;
        if (ch == '\n') indented += "    ";
      }
      body << (m > 1 ? ",\n    " : "    ") << indented;
    } else {
      body << chw_report_text(r.get()) << "\n";
    }
  }
  if (o.json)
    std::cout << "{\n  \"n\": " << o.n << ",\n  \"reports\": [\n" << body.str() << "\n  ],\n  \"pass\": "
              << (all_pass ? "true" : "false") << "\n}\n";
  else
    std::cout << body.str();
  return all_pass ? kExitPass : kExitFail;
}

int dispatch(const std::string& cmd, const Options& o) {
  chw_report* r = nullptr;
  if (cmd == "check-relations") {
    check(chw_check_relations(o.group.c_str(), o.n, o.kappa.c_str(), opt_cstr(o.c), &r));
  } else if (cmd == "commute") {
    check(chw_check_commutativity(o.n, o.kappa.c_str(), opt_cstr(o.c), &r));
  } else if (cmd == "dunkl") {
    return run_dunkl(o);
  } else if (cmd == "orbits") {
    if (o.freeness)
      check(chw_freeness_suite(o.n, o.samples.value_or(20), need_seed(o.seed), &r));
    else
      check(chw_orbit_census(o.n, o.samples.value_or(500), need_seed(o.seed), o.conjugations, &r));
  } else if (cmd == "nilcone") {
    if (o.file)
      check(chw_nilcone_point(read_file(*o.file).c_str(), &r));
    else
      check(chw_nilcone_suite(o.model.c_str(), o.n, o.samples.value_or(200), o.n > 2 ? need_seed(o.seed) : 0, &r));
  } else if (cmd == "springer") {
    return run_springer(o);
  } else if (cmd == "semiinv") {
    if (o.file)
      check(chw_semiinv_point(read_file(*o.file).c_str(), &r));
    else
      check(chw_semiinv_suite(o.n, o.samples.value_or(50), o.conjugations, need_seed(o.seed), &r));
  } else if (cmd == "diffderiv") {
    if (o.file) {
      if (!o.poly) throw UsageError("diffderiv --file needs --poly");
      check(chw_diffderiv_point(o.poly->c_str(), read_file(*o.file).c_str(), &r));
    } else {
      check(chw_diffderiv_suite(o.n, o.samples.value_or(100), o.max_degree, need_seed(o.seed), &r));
    }
  } else if (cmd == "epsilon") {
    if (o.points)
      check(chw_epsilon_points(o.model.c_str(), o.points->c_str(), &r));
    else
      check(chw_epsilon_suite(o.model.c_str(), o.n, o.samples.value_or(100), need_seed(o.seed), &r));
  } else {
    throw UsageError("unknown subcommand");
  }
  return emit(r, o.json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for trigonometric Cherednik algebras and their matrix geometry", "chw"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.json, "Emit a single JSON document"); };
  auto add_kappa = [&](CLI::App* s) {
    s->add_option("--kappa", o.kappa, "Deformation parameter: formal or a rational p/q")->capture_default_str();
    s->add_option("--c", o.c, "TDO parameter c; sets kappa = c/n and echoes c");
  };
  auto add_random = [&](CLI::App* s) {
    s->add_option("--seed", o.seed, "Seed for randomized suites (required for them)");
    s->add_option("--samples", o.samples, "Number of seeded samples")->check(CLI::Range(0, 1000000));
  };

  auto* rel = app.add_subcommand("check-relations", "Verify the defining relations as operator identities");
  rel->add_option("--group", o.group, "gl, sl, pgl or xi (embedding into SL x D)")->required();
  rel->add_option("--n", o.n, "Rank")->required();
  add_kappa(rel);
  add_json(rel);

  auto* dk = app.add_subcommand("dunkl", "Apply a Dunkl-Cherednik operator to a Laurent polynomial");
  dk->add_option("--n", o.n, "Number of variables")->required();
  dk->add_option("--y", o.y, "Index k for y_k, or comma-separated coordinates")->required();
  dk->add_option("--poly", o.poly, "Laurent polynomial in x1..xn and k")->required();
  dk->add_option("--group", o.group, "gl or sl")->default_val("gl");
  dk->add_option("--kappa", o.kappa, "formal or a rational p/q")->capture_default_str();
  add_json(dk);

  auto* cm = app.add_subcommand("commute", "Verify commutativity of the Dunkl-Cherednik operators");
  cm->add_option("--n", o.n, "Rank")->required();
  add_kappa(cm);
  add_json(cm);

  auto* orb = app.add_subcommand("orbits", "Orbit census on nilpotent pairs, or stabilizers on the open orbit");
  orb->add_option("--n", o.n, "Dimension (maximum dimension with --freeness)")->required();
  orb->add_option("--conjugations", o.conjugations, "Random conjugations per point")->capture_default_str();
  orb->add_flag("--freeness", o.freeness, "Check trivial stabilizers on constructed open-orbit points");
  add_random(orb);
  add_json(orb);

  auto* nil = app.add_subcommand("nilcone", "Nil-cone membership versus nil-flag existence");
  nil->add_option("--file", o.file, "Quadruple JSON file; otherwise run the suite");
  nil->add_option("--model", o.model, "additive or trig")->capture_default_str();
  nil->add_option("--n", o.n, "Dimension for the suite");
  add_random(nil);
  add_json(nil);

  auto* spr = app.add_subcommand("springer", "Smallness check by relative positions");
  spr->add_option("--n", o.n, "n")->required();
  spr->add_option("--m", o.m, "m (all 1..n when omitted)");
  add_json(spr);

  auto* si = app.add_subcommand("semiinv", "Krylov matrix and semi-invariant f");
  si->add_option("--file", o.file, "Quadruple JSON file (uses x and i); otherwise run the suite");
  si->add_option("--n", o.n, "Dimension for the suite");
  si->add_option("--conjugations", o.conjugations, "Random g per sample")->capture_default_str();
  add_random(si);
  add_json(si);

  auto* dd = app.add_subcommand("diffderiv", "Difference derivative against the dual-number oracle");
  dd->add_option("--file", o.file, "Quadruple JSON file (uses x and y); otherwise run the suite");
  dd->add_option("--poly", o.poly, "Polynomial f in t");
  dd->add_option("--n", o.n, "Dimension for the suite");
  dd->add_option("--max-degree", o.max_degree, "Maximum degree of random f")->capture_default_str();
  add_random(dd);
  add_json(dd);

  auto* eps = app.add_subcommand("epsilon", "Epsilon map from points of T*C and its invariants");
  eps->add_option("--points", o.points, "Points c1:d1,c2:d2,...; otherwise run the suite");
  eps->add_option("--model", o.model, "additive or trig")->capture_default_str();
  eps->add_option("--n", o.n, "Number of points for the suite");
  add_random(eps);
  add_json(eps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    for (const auto* sub : app.get_subcommands()) return dispatch(sub->get_name(), o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
