#include <doctest.h>

#include <json.hpp>

#include "chw/error.hpp"
#include "chw/geometry.hpp"
#include "chw/springer.hpp"

using namespace chw;

namespace {

Permutation perm(std::vector<int> one_based) {
  for (auto& v : one_based) --v;
  return Permutation(one_based);
}

}  // namespace

TEST_CASE("overlap statistic") {
  CHECK(k_of_w(Permutation::identity(5), 3) == 3);
  CHECK(k_of_w(perm({2, 1}), 1) == 0);
  CHECK(k_of_w(perm({3, 2, 1, 4}), 2) == 1);
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m)
      for (const auto& w : Permutation::all(n)) {
        int k = k_of_w(w, m);
        CHECK(k == k_of_w(w.inverse(), m));
        CHECK(k >= std::max(0, 2 * m - n));
        CHECK(k <= m);
      }
  CHECK_THROWS_AS(k_of_w(Permutation::identity(2), 3), DomainError);
}

TEST_CASE("stratum dimensions") {
  CHECK(dim_Zw(2, 1, Permutation::identity(2)) == 3);
  CHECK(dim_total(2, 1) == 3);
  CHECK_FALSE(dim_Zw(2, 1, perm({2, 1})).has_value());
  CHECK(dim_Zw(3, 2, Permutation::identity(3)) == 9);
  CHECK(dim_total(3, 2) == 9);
  // Independent of the length.
  for (const auto& w : Permutation::all(4))
    if (k_of_w(w, 2) > 0) CHECK(*dim_Zw(4, 2, w) == 16 - 2 + k_of_w(w, 2));
}

TEST_CASE("smallness reports") {
  auto r21 = smallness_check(2, 1);
  CHECK(r21.pass);
  CHECK(r21.max_locus == std::vector<Permutation>{Permutation::identity(2)});
  auto r42 = smallness_check(4, 2);
  CHECK(r42.pass);
  CHECK(r42.max_locus.size() == 4);
  for (int n = 1; n <= 5; ++n) {
    auto r = smallness_check(n, n);
    CHECK(r.pass);
    CHECK(r.max_locus.size() == Permutation::all(n).size());
  }
  auto doc = nlohmann::json::parse(r42.to_json());
  CHECK(doc["maxLocusSize"] == 4);
  CHECK(doc["dimTotal"] == 16);
  CHECK(doc["strata"].size() == 24);
  CHECK(doc["strata"][0]["w"] == "[1,2,3,4]");
  CHECK(doc["strata"][23]["dim"] == "empty");
  CHECK_FALSE(nlohmann::json::parse(smallness_check(6, 3).to_json()).contains("strata"));
}

TEST_CASE("Galois counts") {
  CHECK(galois_count(2, 1).group_order == 1);
  CHECK(galois_count(2, 1).summands == 1);
  CHECK(galois_count(4, 2).group_order == 4);
  CHECK(galois_count(4, 2).summands == 4);
  CHECK(galois_count(5, 2).group_order == 12);
  CHECK(galois_count(5, 2).summands == 6);
  // Summands agree with the pairs (lambda, mu) with |lambda| = m.
  for (int n = 1; n <= 7; ++n)
    for (int m = 1; m <= n; ++m) {
      long pairs = 0;
      for (const auto& pp : partition_pairs(n)) {
        int s = 0;
        for (int v : pp.lambda) s += v;
        pairs += s == m;
      }
      CHECK(galois_count(n, m).summands == pairs);
      CHECK(static_cast<long>(smallness_check(n, m).max_locus.size()) == galois_count(n, m).group_order);
    }
}
