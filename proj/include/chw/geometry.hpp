#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chw/linalg.hpp"

namespace chw {

// additive: x in gl_n; trigonometric: x in GL_n.
enum class Model { Additive, Trigonometric };
std::string model_name(Model m);  // "additive", "trig"
Model parse_model(const std::string& text);

struct Quadruple {
  Model model = Model::Additive;
  QMatrix x, y;
  QVector i;  // column vector
  QVector j;  // row vector

  int n() const { return x.rows(); }
  // Shapes agree and, in the trigonometric model, x is invertible.
  void validate() const;
  static Quadruple zero(Model model, int n);

  // {"model","n","x","y","i","j"} with Rational strings.
  static Quadruple from_json(const std::string& text);
  std::string to_json() const;
};

QMatrix moment(const Quadruple& q);
bool is_nilpotent(const QMatrix& y);
bool nilcone_member(const Quadruple& q);

struct Flag {
  std::vector<QVector> basis;  // V_k = span of the first k vectors
};

enum class FlagSearchStatus { Found, None, NeedsFieldExtension };

struct FlagSearchResult {
  FlagSearchStatus status = FlagSearchStatus::None;
  std::optional<Flag> flag;
};

// Complete flag with x V_k in V_k and y V_k in V_{k-1}. Requires moment 0.
FlagSearchResult nil_flag_search(const Quadruple& q);
bool is_nil_flag(const Quadruple& q, const Flag& f);

using Partition = std::vector<int>;  // weakly decreasing, positive parts

struct PartitionPair {
  Partition lambda, mu;
  auto operator<=>(const PartitionPair&) const = default;
  std::string str() const;  // "(2,1;1)"
};

std::vector<Partition> partitions(int n);  // reverse lexicographic
std::vector<PartitionPair> partition_pairs(int n);  // all |lambda|+|mu| = n
long partition_count(int n);

// Jordan type of a nilpotent matrix from its rank sequence.
Partition jordan_type(const QMatrix& y);
// (Jordan type of y, Jordan type induced on V / C[y]v).
PartitionPair orbit_fingerprint(const QMatrix& y, const QVector& v);
// Nilpotent Jordan matrix with the given block sizes.
QMatrix jordan_nilpotent(const Partition& blocks);

struct CensusReport {
  int n = 0;
  long expected = 0;
  long samples = 0;
  long conjugation_checks = 0;
  long invariance_failures = 0;
  std::map<PartitionPair, long> counts;

  long found() const { return static_cast<long>(counts.size()); }
  bool pass() const { return found() == expected && invariance_failures == 0; }
  std::string to_json() const;
};

// Jordan canonical y for each partition of n, with `samples` random vectors
// per type plus every block-tail vector; each point is also checked under
// `conjugations` random rational conjugations.
CensusReport orbit_census(int n, int samples, std::uint64_t seed, int conjugations = 20);

// Rows v, Xv, ..., X^{n-1} v.
QMatrix krylov_matrix(const QMatrix& x, const QVector& v);
// det(krylov)^2 * disc(charpoly X).
Rational f_semiinvariant(const QMatrix& x, const QVector& v);

Quadruple direct_sum(const Quadruple& a, const Quadruple& b);
// x = diag(c), y = diag(d), i = (1,...,1), j = 0.
Quadruple epsilon_map(Model model, const std::vector<std::pair<Rational, Rational>>& points);
// Table of tr(x^a y^b), 0 <= a, b <= n; rows indexed by a.
QMatrix invariants(const Quadruple& q);

// dim {a : [a,X] = 0, a v = 0}.
int stabilizer_dim(const QMatrix& x, const QVector& v);

enum class OrbitStratum { O0, O1, Other };
std::string stratum_name(OrbitStratum s);
// Requires (X - 1)^n = 0.
OrbitStratum unip_stratum(const QMatrix& x, const QVector& v);

// sum_m c_m sum_{a+b=m-1} X^a Y X^b for f = sum_m c_m t^m.
QMatrix diff_derivative_apply(const std::vector<Rational>& f, const QMatrix& x, const QMatrix& y);

// Property suites over seeded samples. Each report is a JSON document with a
// "pass" field.

struct SuiteReport {
  std::string name;
  long total = 0;
  long failures = 0;
  long inconclusive = 0;
  std::vector<std::pair<std::string, std::string>> details;  // ordered extra fields (JSON fragments)

  bool pass() const { return total > 0 && failures == 0 && inconclusive * 10 < total; }
  std::string to_json() const;
};

// On mu^{-1}(0): nil-flag exists iff y is nilpotent. n = 2 uses the exhaustive
// canonical family (samples ignored); larger n samples rational-spectrum points.
SuiteReport nilcone_suite(Model model, int n, int samples, std::uint64_t seed);
// Every point of the exhaustive n = 2 canonical family on mu^{-1}(0).
std::vector<Quadruple> canonical_zero_fiber_n2(Model model);
// Seeded mu^{-1}(0) point with x of rational spectrum.
Quadruple sample_zero_fiber(Model model, int n, std::uint64_t seed);

SuiteReport semiinvariance_suite(int n, int samples, int conjugations, std::uint64_t seed);
SuiteReport diff_derivative_suite(int n, int samples, int max_degree, std::uint64_t seed);
SuiteReport epsilon_suite(Model model, int n, int samples, std::uint64_t seed);
// Stabilizers of constructed O0 representatives for 1 <= n <= max_n.
SuiteReport freeness_suite(int max_n, int samples, std::uint64_t seed);

}  // namespace chw
