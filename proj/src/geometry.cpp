#include "chw/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include <json.hpp>

#include "chw/error.hpp"
#include "chw/parallel.hpp"
#include "chw/sampling.hpp"

namespace chw {

using ojson = nlohmann::ordered_json;

std::string model_name(Model m) { return m == Model::Additive ? "additive" : "trig"; }

Model parse_model(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "additive") return Model::Additive;
  if (t == "trig" || t == "trigonometric") return Model::Trigonometric;
  throw ParseError("unknown model '" + text + "'");
}

// ---------------------------------------------------------------- quadruple

void Quadruple::validate() const {
  const int n = x.rows();
  if (!x.square() || y.rows() != n || y.cols() != n || static_cast<int>(i.size()) != n ||
      static_cast<int>(j.size()) != n)
    throw DomainError("quadruple has inconsistent shapes");
  if (model == Model::Trigonometric && det(x).is_zero()) throw DomainError("x is singular in the trigonometric model");
}

Quadruple Quadruple::zero(Model model, int n) {
  Quadruple q{model, QMatrix(n, n), QMatrix(n, n), QVector(n), QVector(n)};
  if (model == Model::Trigonometric) q.x = QMatrix::identity(n);
  return q;
}

namespace {

Rational json_rational(const ojson& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError("matrix entry is not a rational string");
}

QVector json_vector(const ojson& v, int n, const char* field) {
  if (!v.is_array() || static_cast<int>(v.size()) != n)
    throw ParseError(std::string("field '") + field + "' must be a list of " + std::to_string(n) + " entries");
  QVector out;
  for (const auto& e : v) out.push_back(json_rational(e));
  return out;
}

QMatrix json_matrix(const ojson& v, int n, const char* field) {
  if (!v.is_array() || static_cast<int>(v.size()) != n)
    throw ParseError(std::string("field '") + field + "' must have " + std::to_string(n) + " rows");
  QMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    QVector row = json_vector(v[r], n, field);
    for (int c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

ojson vector_json(const QVector& v) {
  auto a = ojson::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

ojson matrix_json(const QMatrix& m) {
  auto a = ojson::array();
  for (int r = 0; r < m.rows(); ++r) a.push_back(vector_json(m.row(r)));
  return a;
}

ojson partition_json(const Partition& p) {
  auto a = ojson::array();
  for (int v : p) a.push_back(v);
  return a;
}

}  // namespace

Quadruple Quadruple::from_json(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ParseError("quadruple must be a JSON object");
  for (const char* k : {"model", "n", "x", "y", "i", "j"})
    if (!doc.contains(k)) throw ParseError(std::string("missing field '") + k + "'");
  if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 1 || doc["n"].get<long>() > 64)
    throw ParseError("field 'n' must be an integer in [1, 64]");
  if (!doc["model"].is_string()) throw ParseError("field 'model' must be a string");
  const int n = doc["n"].get<int>();
  Quadruple q{parse_model(doc["model"].get<std::string>()), json_matrix(doc["x"], n, "x"),
              json_matrix(doc["y"], n, "y"), json_vector(doc["i"], n, "i"), json_vector(doc["j"], n, "j")};
  q.validate();
  return q;
}

std::string Quadruple::to_json() const {
  ojson d;
  d["model"] = model_name(model);
  d["n"] = n();
  d["x"] = matrix_json(x);
  d["y"] = matrix_json(y);
  d["i"] = vector_json(i);
  d["j"] = vector_json(j);
  return d.dump();
}

// ------------------------------------------------------------- moment map

QMatrix moment(const Quadruple& q) {
  q.validate();
  QMatrix ij = QMatrix::outer(q.i, q.j);
  if (q.model == Model::Additive) return q.x * q.y - q.y * q.x + ij;
  return q.x * q.y * inverse(q.x) - q.y + ij;
}

bool is_nilpotent(const QMatrix& y) { return y.pow(y.rows()).is_zero(); }

bool nilcone_member(const Quadruple& q) { return moment(q).is_zero() && is_nilpotent(q.y); }

// --------------------------------------------------------------- nil-flags

namespace {

QVector unit(int n, int k) {
  QVector e(n);
  e[k] = 1;
  return e;
}

// Coordinates in which `chosen` spans the first vectors: chosen followed by
// standard basis vectors completing it.
std::vector<QVector> completed_basis(const std::vector<QVector>& chosen, int n) {
  std::vector<QVector> all = chosen;
  for (int k = 0; k < n; ++k) all.push_back(unit(n, k));
  return independent_subset(all, n);
}

QMatrix lower_block(const QMatrix& m, int from) {
  const int d = m.rows() - from;
  QMatrix b(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) b(r, c) = m(from + r, from + c);
  return b;
}

}  // namespace

FlagSearchResult nil_flag_search(const Quadruple& q) {
  if (!moment(q).is_zero()) throw DomainError("moment map does not vanish");
  const int n = q.n();
  std::vector<QVector> chosen;
  while (static_cast<int>(chosen.size()) < n) {
    const int s = static_cast<int>(chosen.size());
    const int d = n - s;
    std::vector<QVector> basis = completed_basis(chosen, n);
    QMatrix m = from_columns(basis, n), minv = inverse(m);
    QMatrix xq = lower_block(minv * q.x * m, s), yq = lower_block(minv * q.y * m, s);
    // Largest xq-stable subspace of ker yq: common kernel of yq xq^k.
    QMatrix stack(d * d, d);
    QMatrix yxk = yq;
    for (int k = 0; k < d; ++k) {
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) stack(k * d + r, c) = yxk(r, c);
      yxk = yxk * xq;
    }
    std::vector<QVector> u = kernel(stack);
    if (u.empty()) return {FlagSearchStatus::None, std::nullopt};
    QMatrix ub = from_columns(u, d);
    QMatrix restricted(static_cast<int>(u.size()), static_cast<int>(u.size()));
    for (std::size_t c = 0; c < u.size(); ++c) {
      auto coords = solve(ub, xq * u[c]);
      if (!coords) throw InternalError("subspace is not x-stable");
      for (std::size_t r = 0; r < u.size(); ++r) restricted(static_cast<int>(r), static_cast<int>(c)) = (*coords)[r];
    }
    std::vector<Rational> roots;
    try {
      roots = rational_roots(charpoly(restricted));
    } catch (const DomainError&) {
      return {FlagSearchStatus::NeedsFieldExtension, std::nullopt};
    }
    if (roots.empty()) return {FlagSearchStatus::NeedsFieldExtension, std::nullopt};
    QMatrix shifted = restricted - QMatrix::identity(restricted.rows()).scaled(roots.front());
    QVector w = ub * kernel(shifted).front();
    QVector lift(n);
    for (int k = 0; k < d; ++k)
      for (int r = 0; r < n; ++r) lift[r] += w[k] * basis[s + k][r];
    chosen.push_back(std::move(lift));
  }
  Flag f{chosen};
  if (!is_nil_flag(q, f)) throw InternalError("nil-flag search produced an invalid flag");
  return {FlagSearchStatus::Found, f};
}

bool is_nil_flag(const Quadruple& q, const Flag& f) {
  const int n = q.n();
  if (static_cast<int>(f.basis.size()) != n || rank(from_columns(f.basis, n)) != n) return false;
  for (int k = 1; k <= n; ++k) {
    std::vector<QVector> vk(f.basis.begin(), f.basis.begin() + k), vk1(f.basis.begin(), f.basis.begin() + k - 1);
    for (const auto& b : vk) {
      if (!in_span(vk, q.x * b, n)) return false;
      if (!in_span(vk1, q.y * b, n)) return false;
    }
  }
  return true;
}

// -------------------------------------------------------------- partitions

std::string PartitionPair::str() const {
  auto join = [](const Partition& p) {
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
    return s;
  };
  return "(" + join(lambda) + ";" + join(mu) + ")";
}

namespace {

void partitions_rec(int rest, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(rest, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rest - p, p, cur, out);
    cur.pop_back();
  }
}

// Partition with the given rank sequence ranks[k] = rank(y^k), ranks[0] = dim.
Partition partition_from_ranks(const std::vector<int>& ranks) {
  std::vector<int> at_least;  // number of blocks of size >= k+1
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
  Partition p;
  for (int i = 1; !at_least.empty() && i <= at_least.front(); ++i) {
    int len = 0;
    for (int b : at_least)
      if (b >= i) ++len;
    p.push_back(len);
  }
  return p;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw DomainError("negative partition size");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<PartitionPair> partition_pairs(int n) {
  std::vector<PartitionPair> out;
  for (int a = 0; a <= n; ++a)
    for (const auto& l : partitions(a))
      for (const auto& m : partitions(n - a)) out.push_back({l, m});
  return out;
}

long partition_count(int n) { return static_cast<long>(partitions(n).size()); }

Partition jordan_type(const QMatrix& y) {
  if (!is_nilpotent(y)) throw DomainError("matrix is not nilpotent");
  const int n = y.rows();
  std::vector<int> ranks{n};
  QMatrix p = y;
  for (int k = 1; k <= n; ++k) {
    ranks.push_back(rank(p));
    p = p * y;
  }
  return partition_from_ranks(ranks);
}

PartitionPair orbit_fingerprint(const QMatrix& y, const QVector& v) {
  const int n = y.rows();
  if (static_cast<int>(v.size()) != n) throw DomainError("vector has wrong length");
  Partition lambda = jordan_type(y);
  std::vector<QVector> orbit;
  QVector w = v;
  for (int k = 0; k < n; ++k) {
    orbit.push_back(w);
    w = y * w;
  }
  std::vector<QVector> span = independent_subset(orbit, n);
  const int dim_w = static_cast<int>(span.size());
  std::vector<int> ranks{n - dim_w};
  QMatrix p = y;
  for (int k = 1; k <= n - dim_w; ++k) {
    std::vector<QVector> cols = span;
    for (int c = 0; c < n; ++c) cols.push_back(p.column(c));
    ranks.push_back(rank(from_columns(cols, n)) - dim_w);
    p = p * y;
  }
  return {lambda, partition_from_ranks(ranks)};
}

QMatrix jordan_nilpotent(const Partition& blocks) {
  const int n = std::accumulate(blocks.begin(), blocks.end(), 0);
  QMatrix y(n, n);
  int o = 0;
  for (int b : blocks) {
    for (int k = 0; k + 1 < b; ++k) y(o + k + 1, o + k) = 1;
    o += b;
  }
  return y;
}

// ---------------------------------------------------------------- census

std::string CensusReport::to_json() const {
  ojson d;
  d["n"] = n;
  d["expected"] = expected;
  d["found"] = found();
  auto fps = ojson::array();
  for (const auto& [pp, count] : counts) {
    ojson e;
    e["lambda"] = partition_json(pp.lambda);
    e["mu"] = partition_json(pp.mu);
    e["count"] = count;
    fps.push_back(e);
  }
  d["fingerprints"] = fps;
  d["samples"] = samples;
  d["conjugationChecks"] = conjugation_checks;
  d["invarianceFailures"] = invariance_failures;
  d["pass"] = pass();
  return d.dump(2);
}

namespace {

// Every sum of y^{h_b} g_b over blocks b, with tail heights 0 <= h_b <= size.
std::vector<QVector> block_tail_vectors(const Partition& blocks) {
  const int n = std::accumulate(blocks.begin(), blocks.end(), 0);
  std::vector<QVector> out;
  std::vector<int> h(blocks.size(), 0);
  for (;;) {
    QVector v(n);
    int o = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (h[b] < blocks[b]) v[o + h[b]] = 1;
      o += blocks[b];
    }
    out.push_back(std::move(v));
    std::size_t b = 0;
    while (b < blocks.size() && h[b] == blocks[b]) h[b++] = 0;
    if (b == blocks.size()) break;
    ++h[b];
  }
  return out;
}

}  // namespace

CensusReport orbit_census(int n, int samples, std::uint64_t seed, int conjugations) {
  if (n < 1 || n > 6) throw DomainError("orbit census supports 1 <= n <= 6");
  if (samples < 0 || conjugations < 0) throw DomainError("negative sample count");
  struct Point {
    std::size_t type;
    std::optional<QVector> v;  // canonical vector, or nullopt for a random one
  };
  std::vector<Partition> types = partitions(n);
  std::vector<Point> points;
  for (std::size_t t = 0; t < types.size(); ++t) {
    for (auto& v : block_tail_vectors(types[t])) points.push_back({t, std::move(v)});
    for (int s = 0; s < samples; ++s) points.push_back({t, std::nullopt});
  }
  struct Outcome {
    PartitionPair fp;
    long failures = 0;
  };
  std::vector<Outcome> results(points.size());
  parallel_for(points.size(), [&](std::size_t k) {
    Sampler rng(derive_seed(seed, k));
    QMatrix y = jordan_nilpotent(types[points[k].type]);
    QVector v = points[k].v ? *points[k].v : rng.sparse_vector(n);
    results[k].fp = orbit_fingerprint(y, v);
    for (int c = 0; c < conjugations; ++c) {
      QMatrix g = rng.invertible(n);
      if (orbit_fingerprint(g * y * inverse(g), g * v) != results[k].fp) ++results[k].failures;
    }
  });
  CensusReport rep;
  rep.n = n;
  rep.expected = static_cast<long>(partition_pairs(n).size());
  rep.samples = static_cast<long>(points.size());
  rep.conjugation_checks = rep.samples * conjugations;
  for (const auto& r : results) {
    ++rep.counts[r.fp];
    rep.invariance_failures += r.failures;
  }
  return rep;
}

// ------------------------------------------------- Krylov and semi-invariant

QMatrix krylov_matrix(const QMatrix& x, const QVector& v) {
  const int n = x.rows();
  if (!x.square() || static_cast<int>(v.size()) != n) throw DomainError("Krylov matrix needs a square X and matching v");
  QMatrix k(n, n);
  QVector w = v;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) k(r, c) = w[c];
    w = x * w;
  }
  return k;
}

Rational f_semiinvariant(const QMatrix& x, const QVector& v) {
  Rational d = det(krylov_matrix(x, v));
  return d * d * charpoly_discriminant(x);
}

// ---------------------------------------------- direct sum, epsilon, traces

Quadruple direct_sum(const Quadruple& a, const Quadruple& b) {
  if (a.model != b.model) throw DomainError("direct sum of quadruples from different models");
  a.validate();
  b.validate();
  const int k = a.n(), m = b.n(), n = k + m;
  Quadruple q{a.model, QMatrix(n, n), QMatrix(n, n), {}, {}};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r < k && c < k) {
        q.x(r, c) = a.x(r, c);
        q.y(r, c) = a.y(r, c);
      } else if (r >= k && c >= k) {
        q.x(r, c) = b.x(r - k, c - k);
        q.y(r, c) = b.y(r - k, c - k);
      }
    }
  q.i = a.i;
  q.i.insert(q.i.end(), b.i.begin(), b.i.end());
  q.j = a.j;
  q.j.insert(q.j.end(), b.j.begin(), b.j.end());
  return q;
}

Quadruple epsilon_map(Model model, const std::vector<std::pair<Rational, Rational>>& points) {
  if (points.empty()) throw DomainError("epsilon map needs at least one point");
  std::optional<Quadruple> acc;
  for (const auto& [c, d] : points) {
    if (model == Model::Trigonometric && c.is_zero()) throw DomainError("zero coordinate in the trigonometric model");
    Quadruple one{model, QMatrix::diagonal({c}), QMatrix::diagonal({d}), {Rational(1)}, {Rational(0)}};
    acc = acc ? direct_sum(*acc, one) : one;
  }
  return *acc;
}

QMatrix invariants(const Quadruple& q) {
  q.validate();
  const int n = q.n();
  QMatrix t(n + 1, n + 1);
  QMatrix xa = QMatrix::identity(n);
  for (int a = 0; a <= n; ++a) {
    QMatrix m = xa;
    for (int b = 0; b <= n; ++b) {
      t(a, b) = m.trace();
      m = m * q.y;
    }
    xa = xa * q.x;
  }
  return t;
}

// ----------------------------------------------------- stabilizers, strata

int stabilizer_dim(const QMatrix& x, const QVector& v) {
  const int n = x.rows();
  if (!x.square() || static_cast<int>(v.size()) != n) throw DomainError("stabilizer needs a square X and matching v");
  // Unknown a(p,q) at column p*n+q; rows: ([a,X])(r,c) = 0, then (a v)(r) = 0.
  QMatrix sys(n * n + n, n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int row = r * n + c;
      for (int k = 0; k < n; ++k) {
        sys(row, r * n + k) += x(k, c);
        sys(row, k * n + c) -= x(r, k);
      }
    }
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) sys(n * n + r, r * n + k) = v[k];
  return n * n - rank(sys);
}

std::string stratum_name(OrbitStratum s) {
  switch (s) {
    case OrbitStratum::O0: return "O0";
    case OrbitStratum::O1: return "O1";
    default: return "OTHER";
  }
}

OrbitStratum unip_stratum(const QMatrix& x, const QVector& v) {
  const int n = x.rows();
  if (!x.square() || static_cast<int>(v.size()) != n) throw DomainError("stratum needs a square X and matching v");
  QMatrix nil = x - QMatrix::identity(n);
  if (!is_nilpotent(nil)) throw DomainError("matrix is not unipotent");
  if (rank(nil) != n - 1) return OrbitStratum::Other;
  auto in_image = [n, &v](const QMatrix& m) {
    std::vector<QVector> cols;
    for (int c = 0; c < n; ++c) cols.push_back(m.column(c));
    return in_span(independent_subset(cols, n), v, n);
  };
  if (!in_image(nil)) return OrbitStratum::O0;
  if (!in_image(nil * nil)) return OrbitStratum::O1;
  return OrbitStratum::Other;
}

QMatrix diff_derivative_apply(const std::vector<Rational>& f, const QMatrix& x, const QMatrix& y) {
  if (!x.square() || y.rows() != x.rows() || y.cols() != x.cols()) throw DomainError("difference derivative needs square X, Y of equal size");
  const int n = x.rows();
  QMatrix out(n, n);
  std::vector<QMatrix> powers{QMatrix::identity(n)};
  for (std::size_t m = 1; m < f.size(); ++m) powers.push_back(powers.back() * x);
  for (std::size_t m = 1; m < f.size(); ++m) {
    if (f[m].is_zero()) continue;
    QMatrix term(n, n);
    for (std::size_t a = 0; a < m; ++a) term += powers[a] * y * powers[m - 1 - a];
    out += term.scaled(f[m]);
  }
  return out;
}

// ------------------------------------------------------------------ suites

std::string SuiteReport::to_json() const {
  ojson d;
  d["suite"] = name;
  d["total"] = total;
  d["failures"] = failures;
  d["inconclusive"] = inconclusive;
  for (const auto& [k, v] : details) d[k] = ojson::parse(v);
  d["pass"] = pass();
  return d.dump(2);
}

namespace {

// Matrix of y |-> L(y) on the chosen entries (r, c), as columns.
QMatrix moment_linear_part(Model model, const QMatrix& x, const std::vector<std::pair<int, int>>& entries) {
  const int n = x.rows();
  QMatrix xinv = model == Model::Trigonometric ? inverse(x) : QMatrix();
  QMatrix sys(n * n, static_cast<int>(entries.size()));
  for (std::size_t e = 0; e < entries.size(); ++e) {
    QMatrix unit_m(n, n);
    unit_m(entries[e].first, entries[e].second) = 1;
    QMatrix img = model == Model::Additive ? x * unit_m - unit_m * x : x * unit_m * xinv - unit_m;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) sys(r * n + c, static_cast<int>(e)) = img(r, c);
  }
  return sys;
}

std::optional<QMatrix> solve_for_y(Model model, const QMatrix& x, const QMatrix& rhs,
                                   const std::vector<std::pair<int, int>>& entries, Sampler& rng) {
  const int n = x.rows();
  QMatrix sys = moment_linear_part(model, x, entries);
  QVector b(n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) b[r * n + c] = rhs(r, c);
  auto sol = solve(sys, b);
  if (!sol) return std::nullopt;
  for (const auto& k : kernel(sys)) {
    Rational t = rng.integer(-2, 2);
    for (std::size_t e = 0; e < k.size(); ++e) (*sol)[e] += t * k[e];
  }
  QMatrix y(n, n);
  for (std::size_t e = 0; e < entries.size(); ++e) y(entries[e].first, entries[e].second) = (*sol)[e];
  return y;
}

Rational rpow(const Rational& base, int e) {
  Rational r(1);
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace

Quadruple sample_zero_fiber(Model model, int n, std::uint64_t seed) {
  Sampler rng(seed);
  const bool distinct = rng.coin(0.7);
  QMatrix t(n, n);
  std::set<long> used;
  for (int k = 0; k < n; ++k) {
    long d;
    do {
      d = rng.integer(-3, 3);
    } while ((model == Model::Trigonometric && d == 0) || (distinct && used.count(d)));
    used.insert(d);
    t(k, k) = d;
    for (int c = k + 1; c < n; ++c) t(k, c) = rng.integer(-2, 2);
  }
  // i on the first p coordinates and j on the rest keep i (x) j strictly upper.
  const int p = static_cast<int>(rng.integer(0, n));
  QVector i(n), j(n);
  for (int k = 0; k < n; ++k) (k < p ? i[k] : j[k]) = rng.coin(0.7) ? rng.nonzero_rational(2) : Rational(0);
  QMatrix rhs = -QMatrix::outer(i, j);
  std::vector<std::pair<int, int>> entries;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!distinct || r < c) entries.emplace_back(r, c);
  auto y = solve_for_y(model, t, rhs, entries, rng);
  if (!y) {
    i.assign(n, Rational(0));
    j.assign(n, Rational(0));
    y = solve_for_y(model, t, QMatrix(n, n), entries, rng);
  }
  // Half of the distinct-spectrum points get a polynomial in t added to y,
  // which commutes with t and usually destroys nilpotency.
  if (distinct && rng.coin()) {
    QMatrix tk = QMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
      *y += tk.scaled(Rational(rng.integer(-1, 1)));
      tk = tk * t;
    }
  }
  QMatrix g = rng.invertible(n), ginv = inverse(g);
  QVector jg(n);
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < n; ++k) jg[c] += j[k] * ginv(k, c);
  Quadruple q{model, g * t * ginv, g * *y * ginv, g * i, jg};
  if (!moment(q).is_zero()) throw InternalError("zero-fiber sampler produced a nonzero moment");
  return q;
}

std::vector<Quadruple> canonical_zero_fiber_n2(Model model) {
  std::vector<long> eig = model == Model::Additive ? std::vector<long>{-1, 0, 1, 2} : std::vector<long>{-1, 1, 2};
  std::vector<QMatrix> xs;
  for (long a : eig) {
    for (long b : eig) xs.push_back(QMatrix::from_rows({{a, 0}, {0, b}}));
    xs.push_back(QMatrix::from_rows({{a, 1}, {0, a}}));
  }
  std::vector<QVector> vecs;
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b) vecs.push_back({a, b});
  std::vector<std::vector<Quadruple>> slots(xs.size());
  parallel_for(xs.size(), [&](std::size_t k) {
    for (int code = 0; code < 81; ++code) {
      QMatrix y(2, 2);
      int c = code;
      for (int e = 0; e < 4; ++e, c /= 3) y(e / 2, e % 2) = c % 3 - 1;
      for (const auto& i : vecs)
        for (const auto& j : vecs) {
          Quadruple q{model, xs[k], y, i, j};
          if (moment(q).is_zero()) slots[k].push_back(std::move(q));
        }
    }
  });
  std::vector<Quadruple> out;
  for (auto& s : slots)
    for (auto& q : s) out.push_back(std::move(q));
  return out;
}

SuiteReport nilcone_suite(Model model, int n, int samples, std::uint64_t seed) {
  if (n < 2) throw DomainError("nil-cone suite needs n >= 2");
  std::vector<Quadruple> pts;
  if (n == 2) {
    pts = canonical_zero_fiber_n2(model);
  } else {
    if (samples < 1) throw DomainError("sample count must be positive");
    pts.resize(samples);
    parallel_for(pts.size(), [&](std::size_t k) { pts[k] = sample_zero_fiber(model, n, derive_seed(seed, k)); });
  }
  enum Verdict { Agree, Disagree, Inconclusive };
  std::vector<Verdict> verdict(pts.size());
  std::vector<char> nilpotent(pts.size());
  parallel_for(pts.size(), [&](std::size_t k) {
    nilpotent[k] = is_nilpotent(pts[k].y);
    FlagSearchResult r = nil_flag_search(pts[k]);
    if (r.status == FlagSearchStatus::NeedsFieldExtension)
      verdict[k] = Inconclusive;
    else
      verdict[k] = (r.status == FlagSearchStatus::Found) == static_cast<bool>(nilpotent[k]) ? Agree : Disagree;
  });
  SuiteReport rep;
  rep.name = "nilcone";
  rep.total = static_cast<long>(pts.size());
  long nil = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    nil += nilpotent[k];
    rep.failures += verdict[k] == Disagree;
    rep.inconclusive += verdict[k] == Inconclusive;
  }
  rep.details = {{"model", ojson(model_name(model)).dump()},
                 {"n", std::to_string(n)},
                 {"family", ojson(n == 2 ? "exhaustive" : "sampled").dump()},
                 {"nilpotent", std::to_string(nil)}};
  return rep;
}

SuiteReport semiinvariance_suite(int n, int samples, int conjugations, std::uint64_t seed) {
  if (n < 1 || samples < 1 || conjugations < 1) throw DomainError("semi-invariance suite needs positive sizes");
  std::vector<long> fails(samples), nonzero(samples);
  parallel_for(samples, [&](std::size_t k) {
    Sampler rng(derive_seed(seed, k));
    QMatrix x = rng.matrix(n, n);
    QVector v = rng.vector(n);
    Rational f = f_semiinvariant(x, v);
    nonzero[k] = !f.is_zero();
    for (int c = 0; c < conjugations; ++c) {
      QMatrix g = rng.invertible(n);
      Rational dg = det(g);
      if (f_semiinvariant(g * x * inverse(g), g * v) != dg * dg * f) ++fails[k];
    }
  });
  SuiteReport rep;
  rep.name = "semiinv";
  rep.total = static_cast<long>(samples) * conjugations;
  rep.failures = std::accumulate(fails.begin(), fails.end(), 0L);
  rep.details = {{"n", std::to_string(n)},
                 {"samples", std::to_string(samples)},
                 {"nonzeroValues", std::to_string(std::accumulate(nonzero.begin(), nonzero.end(), 0L))}};
  return rep;
}

SuiteReport diff_derivative_suite(int n, int samples, int max_degree, std::uint64_t seed) {
  if (n < 1 || samples < 1 || max_degree < 0) throw DomainError("difference-derivative suite needs positive sizes");
  std::vector<char> fail(samples);
  parallel_for(samples, [&](std::size_t k) {
    Sampler rng(derive_seed(seed, k));
    std::vector<Rational> f(rng.integer(0, max_degree) + 1);
    for (auto& c : f) c = rng.rational();
    QMatrix x = rng.matrix(n, n), y = rng.matrix(n, n);
    DMatrix z(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) z(r, c) = DualNumber(x(r, c), y(r, c));
    DMatrix fz = poly_eval(f, z);
    QMatrix d = diff_derivative_apply(f, x, y), fx = poly_eval(f, x);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (fz(r, c).eps() != d(r, c) || fz(r, c).value() != fx(r, c)) fail[k] = 1;
  });
  SuiteReport rep;
  rep.name = "diffderiv";
  rep.total = samples;
  rep.failures = std::count(fail.begin(), fail.end(), 1);
  rep.details = {{"n", std::to_string(n)}, {"maxDegree", std::to_string(max_degree)}};
  return rep;
}

SuiteReport epsilon_suite(Model model, int n, int samples, std::uint64_t seed) {
  if (n < 1 || samples < 1) throw DomainError("epsilon suite needs positive sizes");
  std::vector<char> fail(samples);
  parallel_for(samples, [&](std::size_t k) {
    Sampler rng(derive_seed(seed, k));
    std::vector<std::pair<Rational, Rational>> pts;
    for (int p = 0; p < n; ++p)
      pts.emplace_back(model == Model::Trigonometric ? rng.nonzero_rational() : rng.rational(), rng.rational());
    Quadruple q = epsilon_map(model, pts);
    QMatrix inv = invariants(q);
    bool ok = moment(q).is_zero();
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) {
        Rational s;
        for (const auto& [c, d] : pts) s += rpow(c, a) * rpow(d, b);
        ok = ok && s == inv(a, b);
      }
    std::shuffle(pts.begin(), pts.end(), rng.engine());
    ok = ok && invariants(epsilon_map(model, pts)) == inv;
    fail[k] = !ok;
  });
  SuiteReport rep;
  rep.name = "epsilon";
  rep.total = samples;
  rep.failures = std::count(fail.begin(), fail.end(), 1);
  rep.details = {{"model", ojson(model_name(model)).dump()}, {"n", std::to_string(n)}};
  return rep;
}

SuiteReport freeness_suite(int max_n, int samples, std::uint64_t seed) {
  if (max_n < 1 || samples < 1) throw DomainError("freeness suite needs positive sizes");
  const std::size_t count = static_cast<std::size_t>(max_n) * samples;
  std::vector<char> fail(count);
  parallel_for(count, [&](std::size_t k) {
    const int n = static_cast<int>(k / samples) + 1;
    Sampler rng(derive_seed(seed, k));
    // Regular unipotent 1 + N with N e_r = e_{r+1}; e_1 spans a complement of im N.
    QMatrix nil = jordan_nilpotent({n});
    QVector w(n);
    w[0] = rng.nonzero_rational();
    for (int r = 1; r < n; ++r) w[r] = rng.rational();
    QMatrix g = rng.invertible(n), ginv = inverse(g);
    QMatrix x = g * (QMatrix::identity(n) + nil) * ginv;
    QVector v = g * w;
    fail[k] = unip_stratum(x, v) != OrbitStratum::O0 || stabilizer_dim(x, v) != 0;
  });
  SuiteReport rep;
  rep.name = "freeness";
  rep.total = static_cast<long>(count);
  rep.failures = std::count(fail.begin(), fail.end(), 1);
  rep.details = {{"maxN", std::to_string(max_n)}};
  return rep;
}

}  // namespace chw
