#include <doctest.h>

#include <cstring>
#include <string>

#include "chw/chw.h"

namespace {

std::string poly_string(const chw_poly* p) {
  char* s = nullptr;
  REQUIRE(chw_poly_to_string(p, &s) == CHW_OK);
  std::string out = s;
  chw_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("polynomial handles round trip") {
  chw_poly* p = nullptr;
  REQUIRE(chw_poly_parse("-3/2*x3 + x3 + x1^2*x2^-1", 3, "gl", &p) == CHW_OK);
  CHECK(poly_string(p) == "x1^2*x2^-1 - 1/2*x3");
  chw_poly* q = nullptr;
  REQUIRE(chw_poly_parse(poly_string(p).c_str(), 3, "gl", &q) == CHW_OK);
  CHECK(poly_string(q) == poly_string(p));
  chw_poly_free(p);
  chw_poly_free(q);
}

TEST_CASE("errors set status, message and column") {
  chw_poly* p = nullptr;
  CHECK(chw_poly_parse("x1^^2", 2, "gl", &p) == CHW_ERR_PARSE);
  CHECK(p == nullptr);
  CHECK(chw_last_error_column() == 4);
  CHECK(std::string(chw_last_error()).find("column 4") != std::string::npos);

  CHECK(chw_poly_parse("x1", 2, "gl", nullptr) == CHW_ERR_ARGUMENT);
  CHECK(chw_poly_parse(nullptr, 2, "gl", &p) == CHW_ERR_ARGUMENT);
  CHECK(chw_poly_parse("x1", 2, "e8", &p) == CHW_ERR_PARSE);

  chw_report* r = nullptr;
  CHECK(chw_springer(3, 4, &r) == CHW_ERR_ARGUMENT);
  CHECK(chw_epsilon_points("trig", "0:1", &r) == CHW_ERR_DOMAIN);
  CHECK(chw_epsilon_points("additive", "1;2", &r) == CHW_ERR_PARSE);
  CHECK(r == nullptr);

  // A successful call clears the error.
  REQUIRE(chw_poly_parse("x1", 2, "gl", &p) == CHW_OK);
  CHECK(std::string(chw_last_error()).empty());
  chw_poly_free(p);
}

TEST_CASE("Dunkl-Cherednik operator through the C API") {
  chw_poly* f = nullptr;
  REQUIRE(chw_poly_parse("x1", 2, "gl", &f) == CHW_OK);
  const char* y1[] = {"1", "0"};
  chw_poly* g = nullptr;
  REQUIRE(chw_dunkl_apply(f, y1, 2, "formal", &g) == CHW_OK);
  CHECK(poly_string(g) == "(1+1/2*k)*x1");
  chw_poly_free(g);
  REQUIRE(chw_dunkl_apply(f, y1, 2, "2", &g) == CHW_OK);
  CHECK(poly_string(g) == "2*x1");
  chw_poly_free(g);
  CHECK(chw_dunkl_apply(f, y1, 1, "formal", &g) == CHW_ERR_ARGUMENT);
  chw_poly_free(f);

  REQUIRE(chw_poly_parse("x1", 2, "sl", &f) == CHW_OK);
  CHECK(chw_dunkl_apply(f, y1, 2, "formal", &g) == CHW_ERR_DOMAIN);
  chw_poly_free(f);

  char* kappa = nullptr;
  REQUIRE(chw_kappa_from_c("3", 2, &kappa) == CHW_OK);
  CHECK(std::string(kappa) == "3/2");
  chw_string_free(kappa);
}

TEST_CASE("report handles") {
  chw_report* r = nullptr;
  REQUIRE(chw_check_relations("gl", 2, "formal", nullptr, &r) == CHW_OK);
  CHECK(chw_report_pass(r) == 1);
  CHECK(std::string(chw_report_json(r)).find("\"overall\": true") != std::string::npos);
  CHECK(std::string(chw_report_text(r)).find("all relations hold") != std::string::npos);
  chw_report_free(r);

  REQUIRE(chw_check_relations("xi", 2, "formal", nullptr, &r) == CHW_OK);
  CHECK(chw_report_pass(r) == 1);
  chw_report_free(r);

  REQUIRE(chw_check_commutativity(2, nullptr, "1", &r) == CHW_OK);
  CHECK(std::string(chw_report_json(r)).find("\"c\": \"1\"") != std::string::npos);
  chw_report_free(r);

  REQUIRE(chw_springer(4, 2, &r) == CHW_OK);
  CHECK(chw_report_pass(r) == 1);
  CHECK(std::string(chw_report_json(r)).find("\"maxLocusSize\": 4") != std::string::npos);
  chw_report_free(r);

  REQUIRE(chw_nilcone_point(R"({"model":"additive","n":2,"x":[["0","2"],["1","0"]],"y":[["0","0"],["0","0"]],"i":["0","0"],"j":["0","0"]})", &r) == CHW_OK);
  CHECK(chw_report_pass(r) == 0);
  chw_report_free(r);

  chw_report* a = nullptr;
  chw_report* b = nullptr;
  REQUIRE(chw_orbit_census(3, 10, 11, 2, &a) == CHW_OK);
  REQUIRE(chw_orbit_census(3, 10, 11, 2, &b) == CHW_OK);
  CHECK(std::strcmp(chw_report_json(a), chw_report_json(b)) == 0);
  chw_report_free(a);
  chw_report_free(b);

  REQUIRE(chw_diffderiv_point("t^3", R"({"model":"additive","n":2,"x":[["0","1"],["0","0"]],"y":[["0","0"],["1","0"]],"i":["0","0"],"j":["0","0"]})", &r) == CHW_OK);
  CHECK(chw_report_pass(r) == 1);
  chw_report_free(r);
  CHECK(chw_diffderiv_point("t^-1", R"({"model":"additive","n":1,"x":[["1"]],"y":[["1"]],"i":["0"],"j":["0"]})", &r) == CHW_ERR_DOMAIN);

  CHECK(chw_report_pass(nullptr) == 0);
  chw_report_free(nullptr);
}
