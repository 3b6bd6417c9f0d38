#include <doctest.h>

#include <random>

#include "chw/error.hpp"
#include "chw/laurent.hpp"
#include "chw/text.hpp"

using namespace chw;

namespace {

LaurentPoly P(const char* s, Ambient amb) { return parse_laurent(s, amb); }

LaurentPoly random_poly(std::mt19937_64& rng, Ambient amb, int terms, int range) {
  std::uniform_int_distribution<int> ex(-range, range), co(-5, 5);
  LaurentPoly p(amb);
  for (int t = 0; t < terms; ++t) {
    Exponent e(amb.nvars());
    for (auto& v : e) v = ex(rng);
    p.add_term(e, Rational(co(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("laurent_mul examples") {
  auto g2 = Ambient::gl(2);
  CHECK(laurent_mul(P("x1", g2), P("x1^-1", g2)) == LaurentPoly::constant(g2, 1));
  CHECK(laurent_mul(P("x1+x2", g2), P("x1-x2", g2)) == P("x1^2-x2^2", g2));

  auto s2 = Ambient::sl(2);
  auto sq = laurent_mul(LaurentPoly::variable(s2, 0), LaurentPoly::variable(s2, 0));
  REQUIRE(sq.size() == 1);
  CHECK(sq.terms().begin()->first == Exponent{2, 0});
  CHECK(laurent_mul(LaurentPoly::variable(s2, 0), LaurentPoly::variable(s2, 1)) ==
        LaurentPoly::constant(s2, 1));
  CHECK_THROWS_AS(laurent_mul(P("x1", g2), LaurentPoly::variable(s2, 0)), DomainError);
}

TEST_CASE("sn_act examples") {
  auto g2 = Ambient::gl(2), g3 = Ambient::gl(3);
  auto s12 = Permutation::transposition(2, 0, 1);
  CHECK(sn_act(s12, P("x1", g2)) == P("x2", g2));
  CHECK(sn_act(s12, P("x1*x2", g2)) == P("x1*x2", g2));
  CHECK(sn_act(Permutation::cycle(3), P("x1^2*x2", g3)) == P("x2^2*x3", g3));
}

TEST_CASE("divided_difference examples") {
  auto g2 = Ambient::gl(2);
  CHECK(divided_difference(0, 1, P("x1", g2)) == P("x1", g2));
  CHECK(divided_difference(0, 1, P("x1*x2", g2)).is_zero());
  CHECK(divided_difference(0, 1, P("x1^2", g2)) == P("x1^2 + x1*x2", g2));
}

TEST_CASE("sl_normalize examples") {
  CHECK(sl_normalize({2, 1}) == Exponent{1, 0});
  CHECK(sl_normalize({0, 0}) == Exponent{0, 0});
  CHECK(sl_normalize({-1, 3, 1}) == Exponent{0, 4, 2});
  for (int c = -4; c <= 4; ++c) CHECK(sl_normalize({-1 + c, 3 + c, 1 + c}) == Exponent{0, 4, 2});
}

TEST_CASE("divided difference round trip and symmetric vanishing") {
  std::mt19937_64 rng(3);
  for (Ambient amb : {Ambient::gl(2), Ambient::gl(3), Ambient::sl(3), Ambient::sl(2)}) {
    for (int it = 0; it < 40; ++it) {
      auto f = random_poly(rng, amb, 5, 3);
      for (int i = 0; i < amb.n; ++i)
        for (int j = 0; j < amb.n; ++j) {
          if (i == j) continue;
          auto d = divided_difference(i, j, f);
          Exponent ei(amb.nvars(), 0);
          ei[i] = -1;
          ei[j] = 1;
          auto factor = LaurentPoly::constant(amb, 1) - LaurentPoly::monomial(amb, ei);
          auto sij = Permutation::transposition(amb.n, i, j);
          CHECK(factor * d == f - sn_act(sij, f));
        }
      // An orbit sum is symmetric, so every divided difference vanishes on it.
      LaurentPoly sym(amb);
      for (const auto& w : Permutation::all(amb.n)) sym += sn_act(w, f);
      CHECK(divided_difference(0, 1, sym).is_zero());
    }
  }
}

TEST_CASE("sn_act is a group action") {
  std::mt19937_64 rng(5);
  auto amb = Ambient::gl(3);
  auto perms = Permutation::all(3);
  for (int it = 0; it < 30; ++it) {
    auto f = random_poly(rng, amb, 4, 2);
    CHECK(sn_act(Permutation::identity(3), f) == f);
    for (const auto& v : perms)
      for (const auto& w : perms) CHECK(sn_act(v, sn_act(w, f)) == sn_act(v * w, f));
  }
}

TEST_CASE("SL division by a root is exact on multiples") {
  std::mt19937_64 rng(9);
  for (int n : {2, 3}) {
    auto amb = Ambient::sl(n);
    for (int it = 0; it < 30; ++it) {
      auto f = random_poly(rng, amb, 4, 2);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          auto prod = f * root_difference(amb, a, b);
          auto q = prod.divide_by_difference(a, b);
          REQUIRE(q.has_value());
          CHECK(*q == f);
        }
    }
  }
  // x1 - x3 does not divide x1 in C[T] for n = 3.
  CHECK_FALSE(LaurentPoly::variable(Ambient::sl(3), 0).divide_by_difference(0, 2).has_value());
}

TEST_CASE("permutations") {
  Permutation c = Permutation::cycle(3);
  CHECK(c.str() == "[2,3,1]");
  CHECK((c * c * c).is_identity());
  CHECK(c.inverse() * c == Permutation::identity(3));
  CHECK(Permutation(std::vector<int>{2, 1, 0}).length() == 3);
  CHECK(Permutation::all(4).size() == 24);
}
