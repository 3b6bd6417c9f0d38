#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chw/laurent.hpp"

namespace chw {

// #{i <= m : w^{-1}(i) <= m}; equals m iff w preserves {1..m}.
int k_of_w(const Permutation& w, int m);
// n^2 + m - 2.
int dim_total(int n, int m);
// n^2 - 2 + k(w); nullopt for the empty strata with k(w) = 0.
std::optional<int> dim_Zw(int n, int m, const Permutation& w);

struct StratumRecord {
  Permutation w;
  int length = 0;
  int k = 0;
  std::optional<int> dim;
  bool at_max = false;
};

struct SmallnessReport {
  int n = 0, m = 0;
  int dim_total = 0;
  std::vector<StratumRecord> strata;  // lexicographic in w
  std::vector<Permutation> max_locus;
  bool pass = false;

  // Strata are listed only for n <= 5.
  std::string to_json() const;
};

// Enumerates S_n; passes when every stratum is at most dim_total and the
// arg-max set is exactly the parabolic S_m x S_{n-m}.
SmallnessReport smallness_check(int n, int m);

struct GaloisCount {
  long group_order = 0;  // m! (n-m)!
  long summands = 0;     // p(m) p(n-m)
};
GaloisCount galois_count(int n, int m);

}  // namespace chw
