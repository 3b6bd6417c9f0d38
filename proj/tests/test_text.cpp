#include <doctest.h>

#include <random>

#include "chw/error.hpp"
#include "chw/text.hpp"

using namespace chw;

TEST_CASE("parse examples") {
  auto g3 = Ambient::gl(3);
  auto p = parse_laurent("x1^2*x2^-1", g3);
  REQUIRE(p.size() == 1);
  CHECK(p.terms().begin()->first == Exponent{2, -1, 0});
  CHECK(p.terms().begin()->second == RationalFunction(1));

  auto q = parse_laurent("-3/2*x3 + x3", g3);
  REQUIRE(q.size() == 1);
  CHECK(q.coeff({0, 0, 1}) == RationalFunction(Rational(-1, 2)));

  try {
    parse_laurent("x1^^2", g3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 4);
  }
}

TEST_CASE("parse errors") {
  auto g2 = Ambient::gl(2);
  auto column = [&](const char* s) -> std::size_t {
    try {
      parse_laurent(s, g2);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column("x3") == 1);
  CHECK(column("x1 + y") == 6);
  CHECK(column("x1^99999999999") == 4);
  CHECK(column("x1^2000000000") == 4);
  CHECK(column("(x1+x2") == 7);
  CHECK(column("x1/(x1+x2)") == 4);
  CHECK(column("x1 x2") == 4);
  CHECK(column("2 $") == 3);
  CHECK(column("") == 1);
  CHECK(column("x1/0") == 4);
}

TEST_CASE("parse grammar") {
  auto g2 = Ambient::gl(2);
  CHECK(parse_laurent("(x1+x2)^2", g2) == parse_laurent("x1^2 + 2*x1*x2 + x2^2", g2));
  CHECK(parse_laurent("x1^2/x1", g2) == parse_laurent("x1", g2));
  CHECK(parse_laurent("1/2/x2", g2) == parse_laurent("1/2*x2^-1", g2));
  CHECK(parse_laurent("-x1^2", g2) == parse_laurent("-(x1^2)", g2));
  CHECK(parse_laurent("x1^(-2)", g2) == parse_laurent("x1^-2", g2));
  CHECK(parse_laurent("(2*x1)^-1", g2) == parse_laurent("1/2*x1^-1", g2));
  CHECK(parse_laurent("(k+1)*x1 - k*x1", g2) == parse_laurent("x1", g2));
  CHECK(parse_rational_function("(k^2-1)/(k-1)") == parse_rational_function("k+1"));
}

TEST_CASE("printer") {
  auto g2 = Ambient::gl(2);
  CHECK(format_laurent(parse_laurent("(1+1/2*k)*x1", g2)) == "(1+1/2*k)*x1");
  CHECK(format_laurent(parse_laurent("x2^2 - x1^2 + 3", g2)) == "-x1^2 + x2^2 + 3");
  CHECK(format_laurent(LaurentPoly(g2)) == "0");
  CHECK(format_laurent(parse_laurent("-1/2*k*x1*x2^-1 - k^2", g2)) == "-1/2*k*x1*x2^-1 - k^2");
  CHECK(format_laurent(parse_laurent("-2", g2)) == "-2");
}

TEST_CASE("round trip on random polynomials") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> ex(-3, 3), co(-9, 9), den(1, 4), kd(0, 2);
  for (Ambient amb : {Ambient::gl(3), Ambient::sl(3), Ambient{2, Torus::SL, 1}}) {
    for (int it = 0; it < 100; ++it) {
      LaurentPoly p(amb);
      for (int t = 0; t < 4; ++t) {
        Exponent e(amb.nvars());
        for (auto& v : e) v = ex(rng);
        std::vector<Rational> c;
        for (int d = 0; d <= kd(rng); ++d) c.emplace_back(co(rng), den(rng));
        p.add_term(e, RationalFunction(KPoly(c)));
      }
      auto text = format_laurent(p);
      CHECK(parse_laurent(text, amb) == p);
      CHECK(format_laurent(parse_laurent(text, amb)) == text);
    }
  }
}
