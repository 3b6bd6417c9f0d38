#include <doctest.h>

#include <random>

#include "chw/dual_number.hpp"
#include "chw/error.hpp"
#include "chw/rational_function.hpp"

using namespace chw;

namespace {

KPoly kp(std::vector<long> c) {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  return KPoly(r);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  return Rational(num(rng), den(rng));
}

KPoly random_kpoly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng));
  return KPoly(c);
}

RationalFunction random_rf(std::mt19937_64& rng) {
  KPoly den = random_kpoly(rng, 2);
  while (den.is_zero()) den = random_kpoly(rng, 2);
  return RationalFunction::normalize(random_kpoly(rng, 3), den);
}

}  // namespace

TEST_CASE("rational normal form and serialization") {
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("10/-4"), ParseError);
  CHECK_THROWS_AS(Rational::parse(" 7"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK(factorial(5) == Rational(120));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("rf_normalize examples") {
  auto a = RationalFunction::normalize(kp({-1, 0, 1}), kp({-1, 1}));
  CHECK(a.num() == kp({1, 1}));
  CHECK(a.den() == kp({1}));

  auto b = RationalFunction::normalize(kp({0}), kp({0, 1}));
  CHECK(b.is_zero());
  CHECK(b.den() == kp({1}));

  auto c = RationalFunction::normalize(kp({0, 2}), kp({4}));
  CHECK(c.num() == KPoly(std::vector<Rational>{0, Rational(1, 2)}));
  CHECK(c.den() == kp({1}));
  CHECK(c.str() == "1/2*k");

  CHECK_THROWS_WITH_AS(RationalFunction::normalize(kp({1}), KPoly()), "division by zero polynomial",
                       DomainError);
}

TEST_CASE("rational function printing") {
  auto f = RationalFunction::normalize(kp({1, 1}), kp({-2, 1}));
  CHECK(f.str() == "(1+k)/(-2+k)");
  CHECK(RationalFunction(kp({0, 0, -1})).str() == "-k^2");
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    auto a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inv() == RationalFunction(1));

    auto p = random_rational(rng), q = random_rational(rng), r = random_rational(rng);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * (q + r) == p * q + p * r);
    if (!p.is_zero()) CHECK(p * p.inv() == Rational(1));

    DualNumber x(p, q), y(q, r), z(r, p);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!p.is_zero()) CHECK(x * x.inv() == DualNumber(1));
  }
  CHECK_THROWS_AS(DualNumber(0, 1).inv(), DomainError);
}

TEST_CASE("normalization idempotence and substitution homomorphism") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    auto a = random_rf(rng), b = random_rf(rng);
    CHECK(RationalFunction::normalize(a.num(), a.den()) == a);
    Rational k0 = random_rational(rng);
    if (a.den().eval(k0).is_zero() || b.den().eval(k0).is_zero()) continue;
    CHECK((a + b).eval(k0) == a.eval(k0) + b.eval(k0));
    CHECK((a * b).eval(k0) == a.eval(k0) * b.eval(k0));
  }
}

TEST_CASE("evaluation at a pole is an error") {
  auto f = RationalFunction::normalize(kp({1}), kp({-1, 1}));
  CHECK_THROWS_AS(f.eval(Rational(1)), DomainError);
  CHECK(f.eval(Rational(3)) == Rational(1, 2));
}
