// Acceptance run: one PASS/FAIL line per criterion, then a summary.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "chw/cherednik.hpp"
#include "chw/geometry.hpp"
#include "chw/springer.hpp"

using namespace chw;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string secs(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

int failures_in(const PresentationReport& r, const std::string& family) {
  int f = 0;
  for (const auto& i : r.relations) f += !i.pass && i.family == family;
  return f;
}

int count_family(const PresentationReport& r, const std::string& prefix) {
  int c = 0;
  for (const auto& i : r.relations) c += i.family.rfind(prefix, 0) == 0;
  return c;
}

const KappaMode formal = KappaMode::formal_kappa();

Outcome gl_relations() {
  auto t = Clock::now();
  bool ok = true;
  std::size_t instances = 0;
  for (int n : {2, 3}) {
    auto r = check_relations(Group::GL, n, formal, calibrate_convention(n));
    ok = ok && r.overall();
    instances += r.relations.size();
  }
  const double elapsed = seconds_since(t);
  int diagonal = 0, reflection = 0;
  for (int n : {2, 3}) {
    RhoConvention perturbed = calibrate_convention(n);
    perturbed.half_sum[0] += 1;
    auto r = check_relations(Group::GL, n, formal, perturbed);
    diagonal += failures_in(r, "diagonal");
    reflection += failures_in(r, "reflection");
  }
  const bool control = diagonal > 0;
  std::ostringstream d;
  d << instances << " instances " << (ok ? "hold" : "FAIL") << " in " << secs(elapsed)
    << "; perturbed rho: " << diagonal << " diagonal-family failures (required > 0), " << reflection
    << " reflection-family failures";
  return {ok && elapsed <= 120 && control, d.str()};
}

Outcome sl_pgl_relations() {
  bool ok = true;
  int omega = 0;
  std::size_t instances = 0;
  for (Group g : {Group::PGL, Group::SL})
    for (int n : {2, 3}) {
      auto r = check_relations(g, n, formal, calibrate_convention(n));
      ok = ok && r.overall();
      instances += r.relations.size();
      if (g == Group::SL) omega += count_family(r, "omega");
    }
  std::ostringstream d;
  d << instances << " instances, " << omega << " omega checks";
  return {ok && omega > 0, d.str()};
}

Outcome commutativity() {
  bool ok = true;
  int euler = 0;
  for (int n : {2, 3}) {
    auto r = check_commutativity(n, formal, calibrate_convention(n));
    ok = ok && r.overall();
    euler += count_family(r, "euler");
  }
  auto t = Clock::now();
  auto r4 = check_commutativity(4, KappaMode::numeric(Rational(3, 5)), calibrate_convention(4));
  ok = ok && r4.overall();
  euler += count_family(r4, "euler");
  std::ostringstream d;
  d << "n=2,3 formal and n=4 at k=3/5 (" << secs(seconds_since(t)) << "), " << euler << " Euler checks";
  return {ok && euler == 3, d.str()};
}

Outcome xi_embedding() {
  bool ok = true;
  std::size_t instances = 0;
  for (int n : {2, 3}) {
    auto r = check_xi_relations(n, formal, calibrate_convention(n));
    ok = ok && r.overall();
    instances += r.relations.size();
  }
  return {ok, std::to_string(instances) + " instances on the embedded generators"};
}

Outcome orbit_census_counts() {
  const std::map<int, long> expected{{2, 5}, {3, 10}, {4, 20}};
  bool ok = true;
  std::ostringstream d;
  long checks = 0, failures = 0;
  for (const auto& [n, count] : expected) {
    auto r = orbit_census(n, 500, 20260101 + n, 20);
    ok = ok && r.found() == count && r.expected == count && r.invariance_failures == 0;
    d << "n=" << n << ": " << r.found() << "/" << count << "  ";
    checks += r.conjugation_checks;
    failures += r.invariance_failures;
  }
  d << checks << " conjugations, " << failures << " changed the fingerprint";
  return {ok, d.str()};
}

Outcome nilcone_equivalence() {
  bool ok = true;
  std::ostringstream d;
  for (Model m : {Model::Additive, Model::Trigonometric})
    for (int n : {2, 3}) {
      auto r = nilcone_suite(m, n, 300, 31 + n);
      ok = ok && r.pass();
      d << (d.tellp() > 0 ? "; " : "") << model_name(m) << " n=" << n << ": " << r.total << " pts, " << r.failures
        << " mismatches, " << r.inconclusive << " inconclusive";
    }
  return {ok, d.str()};
}

Outcome semi_invariance() {
  bool ok = true;
  long total = 0;
  for (int n = 1; n <= 4; ++n) {
    auto r = semiinvariance_suite(n, 50, 20, 700 + n);
    ok = ok && r.pass();
    total += r.total;
  }
  return {ok, std::to_string(total) + " exact transformation checks, n=1..4"};
}

Outcome difference_derivative() {
  auto r = diff_derivative_suite(3, 100, 6, 808);
  return {r.pass(), std::to_string(r.total) + " samples, " + std::to_string(r.failures) + " disagreements"};
}

Outcome smallness() {
  bool ok = true;
  double n7 = 0;
  for (int n = 1; n <= 7; ++n) {
    auto t = Clock::now();
    for (int m = 1; m <= n; ++m) {
      auto r = smallness_check(n, m);
      ok = ok && r.pass && static_cast<long>(r.max_locus.size()) == galois_count(n, m).group_order;
    }
    if (n == 7) n7 = seconds_since(t);
  }
  return {ok && n7 <= 60, "all 1 <= m <= n <= 7; n=7 in " + secs(n7)};
}

Outcome freeness() {
  auto r = freeness_suite(5, 20, 55);
  QMatrix x = QMatrix::from_rows({{1, 1}, {0, 1}});
  bool strata = unip_stratum(x, {0, 1}) == OrbitStratum::O0 && unip_stratum(x, {1, 0}) == OrbitStratum::O1 &&
                unip_stratum(QMatrix::identity(2), {0, 1}) == OrbitStratum::Other;
  return {r.pass() && strata, std::to_string(r.total) + " open-orbit points with trivial stabilizer; canonical strata " +
                                  (strata ? "correct" : "WRONG")};
}

Outcome epsilon() {
  bool ok = true;
  for (Model m : {Model::Additive, Model::Trigonometric}) ok = ok && epsilon_suite(m, 3, 100, 99).pass();
  return {ok, "100 seeded inputs per model"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"GL relation suite", gl_relations},
      {"SL/PGL relation suites", sl_pgl_relations},
      {"Commutativity and Euler", commutativity},
      {"Embedding relations", xi_embedding},
      {"Orbit census", orbit_census_counts},
      {"Nil-cone / nil-flag", nilcone_equivalence},
      {"Semi-invariance", semi_invariance},
      {"Difference derivative", difference_derivative},
      {"Smallness", smallness},
      {"Open-orbit freeness", freeness},
      {"Epsilon map", epsilon},
  };
  int passed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    passed += o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << index << "] " << name << ": " << o.detail << std::endl;
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass" << std::endl;
  return 0;
}
