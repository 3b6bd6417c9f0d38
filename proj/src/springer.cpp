#include "chw/springer.hpp"

#include <algorithm>

#include <json.hpp>

#include "chw/error.hpp"
#include "chw/geometry.hpp"
#include "chw/parallel.hpp"

namespace chw {

namespace {

void check_range(int n, int m) {
  if (n < 1 || m < 1 || m > n) throw DomainError("need 1 <= m <= n");
}

long symmetric_order(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

bool preserves_prefix(const Permutation& w, int m) {
  for (int i = 0; i < m; ++i)
    if (w(i) >= m) return false;
  return true;
}

}  // namespace

int k_of_w(const Permutation& w, int m) {
  check_range(w.size(), m);
  Permutation inv = w.inverse();
  int k = 0;
  for (int i = 0; i < m; ++i)
    if (inv(i) < m) ++k;
  return k;
}

int dim_total(int n, int m) {
  check_range(n, m);
  return n * n + m - 2;
}

std::optional<int> dim_Zw(int n, int m, const Permutation& w) {
  if (w.size() != n) throw DomainError("permutation size does not match n");
  const int k = k_of_w(w, m);
  if (k == 0) return std::nullopt;
  const int pairs = n * (n - 1) / 2;
  // Orbit of the flag pair, its stabilizer, and the admissible lines.
  return (pairs + w.length()) + (pairs - w.length() + n - 1) + (k - 1);
}

SmallnessReport smallness_check(int n, int m) {
  check_range(n, m);
  if (n > 8) throw DomainError("smallness check enumerates S_n and needs n <= 8");
  std::vector<Permutation> all = Permutation::all(n);
  SmallnessReport rep;
  rep.n = n;
  rep.m = m;
  rep.dim_total = dim_total(n, m);
  rep.strata.resize(all.size());
  parallel_for(all.size(), [&](std::size_t i) {
    StratumRecord& r = rep.strata[i];
    r.w = all[i];
    r.length = all[i].length();
    r.k = k_of_w(all[i], m);
    r.dim = dim_Zw(n, m, all[i]);
    r.at_max = r.dim && *r.dim == rep.dim_total;
  });
  bool bounded = true;
  std::vector<Permutation> parabolic;
  for (const auto& r : rep.strata) {
    if (r.dim && *r.dim > rep.dim_total) bounded = false;
    if (r.at_max) rep.max_locus.push_back(r.w);
    if (preserves_prefix(r.w, m)) parabolic.push_back(r.w);
  }
  rep.pass = bounded && rep.max_locus == parabolic &&
             static_cast<long>(parabolic.size()) == symmetric_order(m) * symmetric_order(n - m);
  return rep;
}

std::string SmallnessReport::to_json() const {
  nlohmann::ordered_json d;
  d["n"] = n;
  d["m"] = m;
  d["dimTotal"] = dim_total;
  d["maxLocusSize"] = max_locus.size();
  d["pass"] = pass;
  if (n <= 5) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : strata) {
      nlohmann::ordered_json e;
      e["w"] = r.w.str();
      e["l"] = r.length;
      e["k"] = r.k;
      if (r.dim)
        e["dim"] = *r.dim;
      else
        e["dim"] = "empty";
      arr.push_back(e);
    }
    d["strata"] = arr;
  }
  return d.dump(2);
}

GaloisCount galois_count(int n, int m) {
  check_range(n, m);
  return {symmetric_order(m) * symmetric_order(n - m), partition_count(m) * partition_count(n - m)};
}

}  // namespace chw
