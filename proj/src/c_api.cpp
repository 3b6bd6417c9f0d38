#include "chw/chw.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "chw/cherednik.hpp"
#include "chw/error.hpp"
#include "chw/geometry.hpp"
#include "chw/springer.hpp"
#include "chw/text.hpp"

using chw::Rational;
using ojson = nlohmann::ordered_json;

struct chw_poly {
  chw::LaurentPoly p;
};

struct chw_report {
  std::string json;
  std::string text;
  bool pass = false;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_column = 0;

// Rejected option values.
struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

chw_status guarded(const std::function<void()>& body) {
  last_error.clear();
  last_column = 0;
  try {
    body();
    return CHW_OK;
  } catch (const chw::ParseError& e) {
    last_error = e.what();
    last_column = e.column();
    return CHW_ERR_PARSE;
  } catch (const chw::DomainError& e) {
    last_error = e.what();
    return CHW_ERR_DOMAIN;
  } catch (const ArgumentError& e) {
    last_error = e.what();
    return CHW_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CHW_ERR_INTERNAL;
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ArgumentError(what);
}

template <class T>
void require_out(T** out) {
  require(out != nullptr, "null output pointer");
  *out = nullptr;
}

std::string str_arg(const char* s, const char* name) {
  require(s != nullptr, std::string("missing ") + name);
  return s;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

chw::Ambient ambient_for(const std::string& group, int n) {
  require(n >= 1 && n <= 16, "n must be in [1, 16]");
  chw::Group g = chw::parse_group(group);
  return g == chw::Group::SL ? chw::Ambient::sl(n) : chw::Ambient::gl(n);
}

chw::Model model_arg(const char* s) { return chw::parse_model(str_arg(s, "model")); }

void require_samples(int samples) { require(samples >= 1 && samples <= 1000000, "samples must be in [1, 1000000]"); }

// Renders a report document as indented "key: value" lines.
void render(const ojson& v, const std::string& indent, std::ostringstream& os) {
  for (const auto& [key, val] : v.items()) {
    if (val.is_object()) {
      os << indent << key << ":\n";
      render(val, indent + "  ", os);
    } else if (val.is_array() && !val.empty() && val.front().is_object()) {
      os << indent << key << ":\n";
      for (const auto& e : val) os << indent << "  " << e.dump() << "\n";
    } else if (val.is_string()) {
      os << indent << key << ": " << val.get<std::string>() << "\n";
    } else {
      os << indent << key << ": " << val.dump() << "\n";
    }
  }
}

chw_report* make_report(const ojson& doc, bool pass) {
  std::ostringstream os;
  render(doc, "", os);
  return new chw_report{doc.dump(2), os.str(), pass};
}

chw_report* make_report(const std::string& json, bool pass) { return make_report(ojson::parse(json), pass); }

ojson matrix_json(const chw::QMatrix& m) {
  auto a = ojson::array();
  for (int r = 0; r < m.rows(); ++r) {
    auto row = ojson::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    a.push_back(row);
  }
  return a;
}

ojson vector_json(const chw::QVector& v) {
  auto a = ojson::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

struct KappaChoice {
  chw::KappaMode mode;
  std::optional<std::string> c;
};

KappaChoice kappa_choice(const char* kappa, const char* c, int n) {
  if (c) {
    Rational cv = Rational::parse(c);
    return {chw::KappaMode::numeric(cv / Rational(n)), cv.str()};
  }
  return {chw::KappaMode::parse(str_arg(kappa, "kappa")), std::nullopt};
}

// Presentation report with c echoed right after kappa.
chw_report* presentation_report(const chw::PresentationReport& rep, const std::optional<std::string>& c) {
  ojson doc = ojson::parse(rep.to_json());
  std::string text = rep.to_text();
  if (c) {
    ojson with_c;
    for (const auto& [key, val] : doc.items()) {
      with_c[key] = val;
      if (key == "kappa") with_c["c"] = *c;
    }
    doc = std::move(with_c);
    text = "c=" + *c + " (kappa = c/n)\n" + text;
  }
  return new chw_report{doc.dump(2), text, rep.overall()};
}

std::vector<Rational> univariate_coefficients(const std::string& text) {
  chw::LaurentPoly p = chw::parse_laurent(text, chw::Ambient::gl(1), {"t"});
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : p.terms()) {
    if (e[0] < 0) throw chw::DomainError("f must be a polynomial in t (negative exponent)");
    if (!c.is_constant()) throw chw::DomainError("f must have rational coefficients");
    if (static_cast<int>(coeffs.size()) <= e[0]) coeffs.resize(e[0] + 1);
    coeffs[e[0]] = c.constant_value();
  }
  return coeffs;
}

}  // namespace

extern "C" {

const char* chw_last_error(void) { return last_error.c_str(); }

size_t chw_last_error_column(void) { return last_column; }

void chw_string_free(char* s) { std::free(s); }

chw_status chw_poly_parse(const char* text, int n, const char* group, chw_poly** out) {
  return guarded([&] {
    require_out(out);
    chw::Ambient amb = ambient_for(group ? group : "gl", n);
    *out = new chw_poly{chw::parse_laurent(str_arg(text, "polynomial text"), amb)};
  });
}

chw_status chw_poly_to_string(const chw_poly* p, char** out) {
  return guarded([&] {
    require_out(out);
    require(p != nullptr, "null polynomial");
    *out = dup_string(chw::format_laurent(p->p));
  });
}

void chw_poly_free(chw_poly* p) { delete p; }

chw_status chw_dunkl_apply(const chw_poly* f, const char* const* y, int y_len, const char* kappa, chw_poly** out) {
  return guarded([&] {
    require_out(out);
    require(f != nullptr && y != nullptr, "null argument");
    const chw::Ambient& amb = f->p.ambient();
    require(y_len == amb.n, "y must have n coordinates");
    std::vector<Rational> coords;
    for (int k = 0; k < y_len; ++k) coords.push_back(Rational::parse(str_arg(y[k], "y coordinate")));
    chw::CartanVector yv(coords, amb.torus);
    chw::KappaMode km = chw::KappaMode::parse(str_arg(kappa, "kappa"));
    chw::OperatorNF t = chw::dunkl(amb, yv, km.scalar(), chw::calibrate_convention(amb.n));
    *out = new chw_poly{chw::op_apply(t, f->p)};
  });
}

chw_status chw_kappa_from_c(const char* c, int n, char** out) {
  return guarded([&] {
    require_out(out);
    require(n >= 1, "n must be positive");
    *out = dup_string((Rational::parse(str_arg(c, "c")) / Rational(n)).str());
  });
}

const char* chw_report_json(const chw_report* r) { return r ? r->json.c_str() : ""; }

const char* chw_report_text(const chw_report* r) { return r ? r->text.c_str() : ""; }

int chw_report_pass(const chw_report* r) { return r && r->pass ? 1 : 0; }

void chw_report_free(chw_report* r) { delete r; }

chw_status chw_check_relations(const char* group, int n, const char* kappa, const char* c, chw_report** out) {
  return guarded([&] {
    require_out(out);
    require(n >= 2 && n <= 6, "n must be in [2, 6]");
    std::string g = str_arg(group, "group");
    KappaChoice k = kappa_choice(kappa, c, n);
    chw::RhoConvention conv = chw::calibrate_convention(n);
    bool xi = g == "xi" || g == "XI" || g == "Xi";
    chw::PresentationReport rep =
        xi ? chw::check_xi_relations(n, k.mode, conv) : chw::check_relations(chw::parse_group(g), n, k.mode, conv);
    *out = presentation_report(rep, k.c);
  });
}

chw_status chw_check_commutativity(int n, const char* kappa, const char* c, chw_report** out) {
  return guarded([&] {
    require_out(out);
    require(n >= 2 && n <= 6, "n must be in [2, 6]");
    KappaChoice k = kappa_choice(kappa, c, n);
    *out = presentation_report(chw::check_commutativity(n, k.mode, chw::calibrate_convention(n)), k.c);
  });
}

chw_status chw_orbit_census(int n, int samples, uint64_t seed, int conjugations, chw_report** out) {
  return guarded([&] {
    require_out(out);
    require(n >= 1 && n <= 5, "n must be in [1, 5]");
    require(samples >= 0 && samples <= 1000000, "samples must be in [0, 1000000]");
    require(conjugations >= 0 && conjugations <= 1000, "conjugations must be in [0, 1000]");
    chw::CensusReport rep = chw::orbit_census(n, samples, seed, conjugations);
    *out = make_report(rep.to_json(), rep.pass());
  });
}

chw_status chw_freeness_suite(int max_n, int samples, uint64_t seed, chw_report** out) {
  return guarded([&] {
    require_out(out);
    require(max_n >= 1 && max_n <= 8, "n must be in [1, 8]");
    require_samples(samples);
    chw::SuiteReport rep = chw::freeness_suite(max_n, samples, seed);
    *out = make_report(rep.to_json(), rep.pass());
  });
}

chw_status chw_nilcone_suite(const char* model, int n, int samples, uint64_t seed, chw_report** out) {
  return guarded([&] {
    require_out(out);
    require(n >= 2 && n <= 6, "n must be in [2, 6]");
    if (n > 2) require_samples(samples);
    chw::SuiteReport rep = chw::nilcone_suite(model_arg(model), n, samples, seed);
    *out = make_report(rep.to_json(), rep.pass());
  });
}

chw_status chw_nilcone_point(const char* quadruple_json, chw_report** out) {
  return guarded([&] {
    require_out(out);
    chw::Quadruple q = chw::Quadruple::from_json(str_arg(quadruple_json, "quadruple"));
    chw::QMatrix mu = chw::moment(q);
    const bool nil = chw::is_nilpotent(q.y);
    ojson doc;
    doc["model"] = chw::model_name(q.model);
    doc["n"] = q.n();
    doc["moment"] = matrix_json(mu);
    doc["momentZero"] = mu.is_zero();
    doc["nilpotent"] = nil;
    doc["nilconeMember"] = mu.is_zero() && nil;
    bool pass = true;
    if (!mu.is_zero()) {
      doc["flagSearch"] = "not applicable";
    } else {
      chw::FlagSearchResult r = chw::nil_flag_search(q);
      switch (r.status) {
        case chw::FlagSearchStatus::Found: {
          doc["flagSearch"] = "found";
          auto basis = ojson::array();
          for (const auto& b : r.flag->basis) basis.push_back(vector_json(b));
          doc["flag"] = basis;
          pass = nil;
          break;
        }
        case chw::FlagSearchStatus::None:
          doc["flagSearch"] = "none";
          pass = !nil;
          break;
        case chw::FlagSearchStatus::NeedsFieldExtension:
          doc["flagSearch"] = "needs field extension";
          pass = false;
          break;
      }
    }
    doc["pass"] = pass;
    *out = make_report(doc, pass);
  });
}

chw_status chw_semiinv_suite(int n, int samples, int conjugations, uint64_t seed, chw_report** out) {
  return guarded([&] {
    require_out(out);
    require(n >= 1 && n <= 8, "n must be in [1, 8]");
    require_samples(samples);
    require(conjugations >= 1 && conjugations <= 1000, "conjugations must be in [1, 1000]");
    chw::SuiteReport rep = chw::semiinvariance_suite(n, samples, conjugations, seed);
    *out = make_report(rep.to_json(), rep.pass());
  });
}

chw_status chw_semiinv_point(const char* quadruple_json, chw_report** out) {
  return guarded([&] {
    require_out(out);
    chw::Quadruple q = chw::Quadruple::from_json(str_arg(quadruple_json, "quadruple"));
    chw::QMatrix k = chw::krylov_matrix(q.x, q.i);
    Rational d = chw::det(k);
    ojson doc;
    doc["n"] = q.n();
    doc["krylov"] = matrix_json(k);
    doc["krylovDet"] = d.str();
    doc["cyclic"] = !d.is_zero();
    doc["discriminant"] = chw::charpoly_discriminant(q.x).str();
    doc["f"] = chw::f_semiinvariant(q.x, q.i).str();
    doc["pass"] = true;
    *out = make_report(doc, true);
  });
}

chw_status chw_diffderiv_suite(int n, int samples, int max_degree, uint64_t seed, chw_report** out) {
  return guarded([&] {
    require_out(out);
    require(n >= 1 && n <= 8, "n must be in [1, 8]");
    require_samples(samples);
    require(max_degree >= 0 && max_degree <= 32, "max degree must be in [0, 32]");
    chw::SuiteReport rep = chw::diff_derivative_suite(n, samples, max_degree, seed);
    *out = make_report(rep.to_json(), rep.pass());
  });
}

chw_status chw_diffderiv_point(const char* f, const char* quadruple_json, chw_report** out) {
  return guarded([&] {
    require_out(out);
    std::vector<Rational> coeffs = univariate_coefficients(str_arg(f, "f"));
    chw::Quadruple q = chw::Quadruple::from_json(str_arg(quadruple_json, "quadruple"));
    chw::QMatrix d = chw::diff_derivative_apply(coeffs, q.x, q.y);
    chw::DMatrix z(q.n(), q.n());
    for (int r = 0; r < q.n(); ++r)
      for (int c = 0; c < q.n(); ++c) z(r, c) = chw::DualNumber(q.x(r, c), q.y(r, c));
    chw::DMatrix fz = chw::poly_eval(coeffs, z);
    bool agree = true;
    for (int r = 0; r < q.n(); ++r)
      for (int c = 0; c < q.n(); ++c) agree = agree && fz(r, c).eps() == d(r, c);
    ojson doc;
    doc["f"] = std::string(f);
    doc["n"] = q.n();
    doc["result"] = matrix_json(d);
    doc["dualOracle"] = agree;
    doc["pass"] = agree;
    *out = make_report(doc, agree);
  });
}

chw_status chw_epsilon_suite(const char* model, int n, int samples, uint64_t seed, chw_report** out) {
  return guarded([&] {
    require_out(out);
    require(n >= 1 && n <= 8, "n must be in [1, 8]");
    require_samples(samples);
    chw::SuiteReport rep = chw::epsilon_suite(model_arg(model), n, samples, seed);
    *out = make_report(rep.to_json(), rep.pass());
  });
}

chw_status chw_epsilon_points(const char* model, const char* points, chw_report** out) {
  return guarded([&] {
    require_out(out);
    chw::Model m = model_arg(model);
    std::string text = str_arg(points, "points");
    std::vector<std::pair<Rational, Rational>> pts;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string::npos) end = text.size();
      std::string item = text.substr(start, end - start);
      std::size_t colon = item.find(':');
      if (colon == std::string::npos) throw chw::ParseError("expected c:d", start + 1);
      try {
        pts.emplace_back(Rational::parse(item.substr(0, colon)), Rational::parse(item.substr(colon + 1)));
      } catch (const chw::ParseError&) {
        throw chw::ParseError("expected rational c:d", start + 1);
      }
      start = end + 1;
    }
    require(pts.size() <= 16, "at most 16 points");
    chw::Quadruple q = chw::epsilon_map(m, pts);
    chw::QMatrix inv = chw::invariants(q);
    bool sums = true;
    for (int a = 0; a < inv.rows(); ++a)
      for (int b = 0; b < inv.cols(); ++b) {
        Rational s;
        for (const auto& [c, d] : pts) s += c.pow(a) * d.pow(b);
        sums = sums && s == inv(a, b);
      }
    const bool zero = chw::moment(q).is_zero();
    ojson doc;
    doc["quadruple"] = ojson::parse(q.to_json());
    doc["momentZero"] = zero;
    doc["invariants"] = matrix_json(inv);
    doc["powerSums"] = sums;
    doc["pass"] = zero && sums;
    *out = make_report(doc, zero && sums);
  });
}

chw_status chw_springer(int n, int m, chw_report** out) {
  return guarded([&] {
    require_out(out);
    require(n >= 1 && n <= 8, "n must be in [1, 8]");
    require(m >= 1 && m <= n, "m must be in [1, n]");
    chw::SmallnessReport rep = chw::smallness_check(n, m);
    chw::GaloisCount g = chw::galois_count(n, m);
    ojson doc = ojson::parse(rep.to_json());
    ojson full;
    for (const auto& [key, val] : doc.items()) {
      if (key == "strata") {
        full["groupOrder"] = g.group_order;
        full["summands"] = g.summands;
      }
      full[key] = val;
    }
    if (!full.contains("groupOrder")) {
      full["groupOrder"] = g.group_order;
      full["summands"] = g.summands;
    }
    *out = make_report(full, rep.pass);
  });
}

}  // extern "C"
