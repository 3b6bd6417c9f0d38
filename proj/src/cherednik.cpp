#include "chw/cherednik.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "chw/error.hpp"
#include "chw/parallel.hpp"
#include "chw/text.hpp"

namespace chw {

std::string group_name(Group g) {
  switch (g) {
    case Group::GL: return "GL";
    case Group::SL: return "SL";
    case Group::PGL: return "PGL";
  }
  return "?";
}

Group parse_group(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "gl") return Group::GL;
  if (t == "sl") return Group::SL;
  if (t == "pgl") return Group::PGL;
  throw ParseError("unknown group '" + text + "' (expected gl, sl or pgl)");
}

// ------------------------------------------------------------ CartanVector

CartanVector::CartanVector(std::vector<Rational> coords, Torus torus)
    : c_(std::move(coords)), torus_(torus) {
  if (torus_ == Torus::SL) {
    Rational total;
    for (const auto& v : c_) total += v;
    if (!total.is_zero()) throw DomainError("not in t: coordinates must sum to 0");
  }
}

CartanVector CartanVector::basis(int n, int k) {
  std::vector<Rational> c(n);
  c.at(k) = 1;
  return CartanVector(std::move(c));
}

CartanVector CartanVector::simple_coroot(int n, int a) {
  std::vector<Rational> c(n);
  c.at(a) = 1;
  c.at(a + 1) = -1;
  return CartanVector(std::move(c), Torus::SL);
}

Rational CartanVector::pairing(const Exponent& eta) const {
  Rational r;
  for (int k = 0; k < n(); ++k) r += c_[k] * Rational(eta.at(k));
  return r;
}

CartanVector CartanVector::permuted(const Permutation& w) const {
  std::vector<Rational> out(c_.size());
  for (int k = 0; k < n(); ++k) out[w(k)] = c_[k];
  return CartanVector(std::move(out), torus_);
}

// --------------------------------------------------------------- KappaMode

KappaMode KappaMode::parse(const std::string& text) {
  if (text == "formal") return formal_kappa();
  return numeric(Rational::parse(text));
}

RationalFunction KappaMode::scalar() const {
  return formal ? RationalFunction::kappa() : RationalFunction(value);
}

std::string KappaMode::str() const { return formal ? "formal" : value.str(); }

// ----------------------------------------------------------- RhoConvention

std::vector<Rational> RhoConvention::standard_half_sum(int n) {
  std::vector<Rational> r;
  for (int k = 1; k <= n; ++k) r.emplace_back(n + 1 - 2 * k, 2);
  return r;
}

RhoConvention RhoConvention::with_variant(int n, int variant) {
  if (variant < 0 || variant > 7) throw DomainError("convention variant must be in 0..7");
  return {standard_half_sum(n), variant};
}

std::string RhoConvention::describe() const {
  std::ostringstream os;
  os << "variant " << variant << " (kappa sign " << (kappa_sign() > 0 ? "+1" : "-1") << ", side "
     << (side() == SideConvention::Uniform ? "uniform" : "root-ordered") << ", rho sign "
     << (rho_sign() > 0 ? "+1" : "-1") << ")";
  return os.str();
}

// ------------------------------------------------------ PresentationReport

bool PresentationReport::overall() const { return failures() == 0; }

std::size_t PresentationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(relations.begin(), relations.end(), [](const auto& r) { return !r.pass; }));
}

std::string PresentationReport::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["n"] = n;
  j["kappa"] = kappa.str();
  nlohmann::ordered_json conv;
  conv["variant"] = convention.variant;
  conv["kappa_sign"] = convention.kappa_sign();
  conv["side"] = convention.side() == SideConvention::Uniform ? "uniform" : "root-ordered";
  conv["rho_sign"] = convention.rho_sign();
  std::vector<std::string> hs;
  for (const auto& v : convention.half_sum) hs.push_back(v.str());
  conv["half_sum"] = hs;
  j["convention"] = conv;
  auto rel = nlohmann::ordered_json::array();
  for (const auto& r : relations) {
    nlohmann::ordered_json e;
    e["family"] = r.family;
    e["indices"] = r.indices;
    if (r.eta) e["eta"] = *r.eta;
    e["pass"] = r.pass;
    rel.push_back(std::move(e));
  }
  j["relations"] = rel;
  j["overall"] = overall();
  return j.dump(2);
}

std::string PresentationReport::to_text() const {
  std::ostringstream os;
  os << group << " n=" << n << " kappa=" << kappa.str() << " convention " << convention.describe() << "\n";
  for (const auto& r : relations) {
    os << "  " << (r.pass ? "pass" : "FAIL") << "  " << r.family;
    for (int i : r.indices) os << " " << i;
    if (r.eta) {
      os << " eta=(";
      for (std::size_t k = 0; k < r.eta->size(); ++k) os << (k ? "," : "") << (*r.eta)[k];
      os << ")";
    }
    os << "\n";
  }
  os << (overall() ? "all relations hold" : std::to_string(failures()) + " relation(s) failed") << "\n";
  return os.str();
}

// ------------------------------------------------------------------ dunkl

namespace {

OperatorNF mult(const LaurentPoly& p) { return OperatorNF::multiplication(LocalizedCoeff(p)); }

OperatorNF swap_op(const Ambient& amb, int i, int j) {
  return OperatorNF::permutation(amb, Permutation::transposition(amb.n, i, j));
}

}  // namespace

OperatorNF dunkl(const Ambient& amb, const CartanVector& y, const RationalFunction& kappa,
                 const RhoConvention& conv) {
  const int n = amb.n;
  if (y.n() != n) throw DomainError("Cartan vector has wrong length");
  if (static_cast<int>(conv.half_sum.size()) != n) throw DomainError("half-sum has wrong length");
  OperatorNF t = OperatorNF::derivation_along(amb, y.coords());
  Rational rho_y;
  for (int k = 0; k < n; ++k) rho_y += conv.half_sum[k] * y.coords()[k];
  if (!rho_y.is_zero())
    t -= OperatorNF::scalar(amb, kappa * RationalFunction(rho_y * Rational(conv.rho_sign())));
  const auto& pairs = root_pairs(n);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    Rational c = y.root_pairing(i, j);
    if (c.is_zero()) continue;
    std::vector<int> den(pairs.size(), 0);
    den[p] = 1;
    LocalizedCoeff coeff(LaurentPoly::variable(amb, i).scaled(kappa * RationalFunction(c)), den);
    t += OperatorNF::multiplication(coeff) * (OperatorNF::identity(amb) - swap_op(amb, i, j));
  }
  return t;
}

// ------------------------------------------------------- relation engine

namespace {

// Images of the generators of the GL-type algebra in some operator algebra.
struct Realization {
  Ambient amb;
  int n;
  RationalFunction kappa;
  std::function<OperatorNF(const CartanVector&)> y;
  std::function<OperatorNF(int)> x;
};

struct PendingInstance {
  RelationInstance meta;
  std::function<OperatorNF()> defect;  // zero iff the relation holds
};

std::vector<RelationInstance> evaluate(std::vector<PendingInstance> pending) {
  std::vector<RelationInstance> out(pending.size());
  parallel_for(pending.size(), [&](std::size_t k) {
    out[k] = pending[k].meta;
    out[k].pass = op_is_zero(pending[k].defect());
  });
  return out;
}

// x s_ij in the chosen side convention.
OperatorNF x_swap(const Realization& r, const RhoConvention& conv, int i, int j) {
  int xi = conv.side() == SideConvention::Uniform ? j : std::min(i, j);
  return r.x(xi) * swap_op(r.amb, i, j);
}

std::vector<PendingInstance> gl_families(const Realization& r, const RhoConvention& conv) {
  std::vector<PendingInstance> out;
  const int n = r.n;
  RationalFunction sk = r.kappa * RationalFunction(conv.kappa_sign());
  // s_i y - s_i(y) s_i = -k <x_i - x_{i+1}, y>
  for (int i = 0; i + 1 < n; ++i)
    for (int k = 0; k < n; ++k)
      out.push_back({{"reflection", {i + 1, k + 1}, std::nullopt, false}, [=] {
                       auto y = CartanVector::basis(n, k);
                       auto s = swap_op(r.amb, i, i + 1);
                       auto sy = y.permuted(Permutation::transposition(n, i, i + 1));
                       return s * r.y(y) - r.y(sy) * s +
                              OperatorNF::scalar(r.amb, r.kappa * RationalFunction(y.root_pairing(i, i + 1)));
                     }});
  // [y_i, x_j] = k x_j s_ij
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      out.push_back({{"cross", {i + 1, j + 1}, std::nullopt, false}, [=] {
                       return commutator(r.y(CartanVector::basis(n, i)), r.x(j)) -
                              x_swap(r, conv, i, j).scaled(sk);
                     }});
    }
  // [y_k, x_k] = x_k - k x_k sum_{i != k} s_ik
  for (int k = 0; k < n; ++k)
    out.push_back({{"diagonal", {k + 1}, std::nullopt, false}, [=] {
                     OperatorNF d = commutator(r.y(CartanVector::basis(n, k)), r.x(k)) - r.x(k);
                     for (int i = 0; i < n; ++i)
                       if (i != k) d += x_swap(r, conv, i, k).scaled(sk);
                     return d;
                   }});
  return out;
}

Realization gl_realization(int n, const RationalFunction& kappa, const RhoConvention& conv) {
  Ambient amb = Ambient::gl(n);
  return {amb, n, kappa, [=](const CartanVector& y) { return dunkl(amb, y, kappa, conv); },
          [=](int i) { return mult(LaurentPoly::variable(amb, i)); }};
}

PresentationReport make_report(std::string group, int n, const KappaMode& kappa, const RhoConvention& conv,
                               std::vector<PendingInstance> pending) {
  PresentationReport rep;
  rep.group = std::move(group);
  rep.n = n;
  rep.kappa = kappa;
  rep.convention = conv;
  rep.relations = evaluate(std::move(pending));
  return rep;
}

// [y, x^eta] = <eta,y> x^eta - k sum_{i<j} <a_ij,y> (x^eta - s_ij x^eta)/(1 - x_i^-1 x_j) s_ij
OperatorNF lattice_defect(const Ambient& amb, const CartanVector& y, const Exponent& eta,
                          const RationalFunction& kappa, const RhoConvention& conv) {
  LaurentPoly xe = LaurentPoly::monomial(amb, eta);
  RationalFunction sk = kappa * RationalFunction(conv.kappa_sign());
  OperatorNF d = commutator(dunkl(amb, y, kappa, conv), mult(xe)) - mult(xe.scaled(y.pairing(eta)));
  for (auto [i, j] : root_pairs(amb.n)) {
    Rational c = y.root_pairing(i, j);
    if (c.is_zero()) continue;
    LaurentPoly q = divided_difference(i, j, xe);
    if (q.is_zero()) continue;
    d += mult(q.scaled(sk * RationalFunction(c))) * swap_op(amb, i, j);
  }
  return d;
}

}  // namespace

std::vector<PresentationReport> calibration_scan(int n, const std::vector<Rational>& half_sum) {
  if (n < 2) throw DomainError("calibration needs n >= 2");
  std::vector<PresentationReport> out;
  for (int v = 0; v < 8; ++v) {
    RhoConvention conv{half_sum, v};
    out.push_back(make_report("GL", n, KappaMode::formal_kappa(), conv,
                              gl_families(gl_realization(n, RationalFunction::kappa(), conv), conv)));
  }
  return out;
}

RhoConvention calibrate_convention(int n) {
  if (n < 2) throw DomainError("calibration needs n >= 2");
  auto scan = calibration_scan(2, RhoConvention::standard_half_sum(2));
  std::vector<int> passing;
  for (const auto& rep : scan)
    if (rep.overall()) passing.push_back(rep.convention.variant);
  if (passing.size() != 1) throw InternalError("convention calibration failed");
  return RhoConvention::with_variant(n, passing.front());
}

PresentationReport check_relations(Group group, int n, const KappaMode& kappa, const RhoConvention& conv) {
  if (n < 2) throw DomainError("relation suites need n >= 2");
  const RationalFunction k = kappa.scalar();
  if (group == Group::GL)
    return make_report("GL", n, kappa, conv, gl_families(gl_realization(n, k, conv), conv));

  const Ambient amb = group == Group::SL ? Ambient::sl(n) : Ambient::gl(n);
  std::vector<PendingInstance> pending;
  for (int i = 0; i + 1 < n; ++i)
    for (int a = 0; a + 1 < n; ++a)
      pending.push_back({{"reflection", {i + 1, a + 1}, std::nullopt, false}, [=] {
                           auto y = CartanVector::simple_coroot(n, a);
                           auto s = swap_op(amb, i, i + 1);
                           auto sy = y.permuted(Permutation::transposition(n, i, i + 1));
                           return s * dunkl(amb, y, k, conv) - dunkl(amb, sy, k, conv) * s +
                                  OperatorNF::scalar(amb, k * RationalFunction(y.root_pairing(i, i + 1)));
                         }});
  std::vector<Exponent> etas;
  if (group == Group::PGL) {
    for (auto [p, q] : root_pairs(n)) {
      Exponent e(n, 0);
      e[p] = 1;
      e[q] = -1;
      etas.push_back(e);
    }
  } else {
    for (int m = 0; m < n; ++m) {
      Exponent e(n, 0);
      e[m] = 1;
      etas.push_back(e);
    }
  }
  for (int a = 0; a + 1 < n; ++a)
    for (const auto& eta : etas)
      pending.push_back({{"lattice", {a + 1}, eta, false}, [=] {
                           return lattice_defect(amb, CartanVector::simple_coroot(n, a), eta, k, conv);
                         }});
  if (group == Group::SL) {
    for (int a = 0; a + 1 < n; ++a)
      pending.push_back({{"omega-conjugation", {a + 1}, std::nullopt, false}, [=] {
                           auto y = CartanVector::simple_coroot(n, a);
                           auto [wy, shift] = omega_action(y);
                           OperatorNF rhs = dunkl(amb, wy, k, conv) + OperatorNF::scalar(amb, shift);
                           OperatorNF w = omega_generator(n);
                           return w * dunkl(amb, y, k, conv) - rhs * w;
                         }});
    pending.push_back({{"omega-order", {n}, std::nullopt, false},
                       [=] { return power(omega_generator(n), n) - OperatorNF::identity(amb); }});
  }
  return make_report(group_name(group), n, kappa, conv, std::move(pending));
}

// ------------------------------------------------------------------ omega

OperatorNF omega_generator(int n) {
  Ambient amb = Ambient::sl(n);
  return mult(LaurentPoly::variable(amb, 0)) * OperatorNF::permutation(amb, Permutation::cycle(n));
}

OperatorNF omega_inverse(int n) {
  Ambient amb = Ambient::sl(n);
  Exponent e(n, 0);
  e[0] = -1;
  return OperatorNF::permutation(amb, Permutation::cycle(n).inverse()) * mult(LaurentPoly::monomial(amb, e));
}

std::pair<CartanVector, Rational> omega_action(const CartanVector& y) {
  CartanVector wy = y.permuted(Permutation::cycle(y.n()));
  return {wy, -wy.coords()[0]};
}

// -------------------------------------------------------------- symmetrize

LaurentPoly symmetrize(const LaurentPoly& f) {
  const int n = f.ambient().n;
  LaurentPoly acc(f.ambient());
  for (const auto& w : Permutation::all(n)) acc += sn_act(w, f);
  return acc.scaled(RationalFunction(factorial(n).inv()));
}

// --------------------------------------------------------------------- Xi

Ambient xi_ambient(int n) { return {n, Torus::SL, 1}; }

namespace {

OperatorNF xi_y(const CartanVector& y, const RationalFunction& kappa, const RhoConvention& conv) {
  const int n = y.n();
  Ambient amb = xi_ambient(n);
  Rational mean;
  for (const auto& v : y.coords()) mean += v;
  mean /= Rational(n);
  std::vector<Rational> traceless;
  for (const auto& v : y.coords()) traceless.push_back(v - mean);
  OperatorNF t = dunkl(amb, CartanVector(traceless, Torus::SL), kappa, conv);
  if (!mean.is_zero()) t += OperatorNF::generator(amb, derivation_count(amb) - 1).scaled(mean);
  return t;
}

OperatorNF xi_x(int n, int i) {
  Ambient amb = xi_ambient(n);
  Exponent e(amb.nvars(), 0);
  e.at(i) = 1;
  e[n] = 1;
  return mult(LaurentPoly::monomial(amb, e));
}

}  // namespace

OperatorNF xi_embed(const XiGenerator& gen, int n, const RationalFunction& kappa, const RhoConvention& conv) {
  if (gen.i < 0 || gen.i >= n) throw DomainError("generator index out of range");
  switch (gen.kind) {
    case XiGenerator::X: return xi_x(n, gen.i);
    case XiGenerator::Y: return xi_y(CartanVector::basis(n, gen.i), kappa, conv);
    case XiGenerator::S:
      if (gen.j < 0 || gen.j >= n || gen.j == gen.i) throw DomainError("transposition indices invalid");
      return swap_op(xi_ambient(n), gen.i, gen.j);
  }
  throw DomainError("unknown generator");
}

PresentationReport check_xi_relations(int n, const KappaMode& kappa, const RhoConvention& conv) {
  if (n < 2) throw DomainError("relation suites need n >= 2");
  const RationalFunction k = kappa.scalar();
  Realization r{xi_ambient(n), n, k, [=](const CartanVector& y) { return xi_y(y, k, conv); },
                [=](int i) { return xi_x(n, i); }};
  return make_report("GL->SLxD", n, kappa, conv, gl_families(r, conv));
}

// ---------------------------------------------------------- commutativity

PresentationReport check_commutativity(int n, const KappaMode& kappa, const RhoConvention& conv) {
  if (n < 1) throw DomainError("n must be positive");
  const RationalFunction k = kappa.scalar();
  const Ambient amb = Ambient::gl(n);
  // Shared operators are built once up front; the instance closures only read them.
  std::vector<OperatorNF> t(n, OperatorNF(amb));
  parallel_for(n, [&](std::size_t i) { t[i] = dunkl(amb, CartanVector::basis(n, static_cast<int>(i)), k, conv); });

  std::vector<PendingInstance> pending;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      pending.push_back({{"commute", {i + 1, j + 1}, std::nullopt, false},
                         [&t, i, j] { return commutator(t[i], t[j]); }});
  pending.push_back({{"euler", {}, std::nullopt, false}, [&t, amb, n] {
                       OperatorNF d(amb);
                       for (int i = 0; i < n; ++i) d += t[i] - OperatorNF::generator(amb, i);
                       return d;
                     }});
  for (int a = 0; a + 1 < n; ++a)
    pending.push_back({{"descent", {a + 1}, std::nullopt, false}, [=] {
                         LaurentPoly det = LaurentPoly::monomial(amb, Exponent(n, 1));
                         return commutator(dunkl(amb, CartanVector::simple_coroot(n, a), k, conv), mult(det));
                       }});
  return make_report("GL", n, kappa, conv, std::move(pending));
}

}  // namespace chw
