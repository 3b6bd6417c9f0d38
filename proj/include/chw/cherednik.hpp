#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chw/operator.hpp"

namespace chw {

enum class Group { GL, SL, PGL };
std::string group_name(Group g);  // "GL", "SL", "PGL"
Group parse_group(const std::string& text);  // case-insensitive

/// Element of h (GL) or of the trace-zero subspace t (SL), in the basis y_1..y_n.
class CartanVector {
 public:
  CartanVector(std::vector<Rational> coords, Torus torus = Torus::GL);
  static CartanVector basis(int n, int k);             // y_k, 0-based k
  static CartanVector simple_coroot(int n, int a);     // y_a - y_{a+1}, in t

  int n() const { return static_cast<int>(c_.size()); }
  const std::vector<Rational>& coords() const { return c_; }
  Torus torus() const { return torus_; }
  // <x_i - x_j, y>
  Rational root_pairing(int i, int j) const { return c_[i] - c_[j]; }
  // <eta, y>
  Rational pairing(const Exponent& eta) const;
  // w(y_k) = y_{w(k)}
  CartanVector permuted(const Permutation& w) const;

 private:
  std::vector<Rational> c_;
  Torus torus_;
};

/// Deformation parameter: formal k, or a rational value substituted for k.
struct KappaMode {
  bool formal = true;
  Rational value;

  static KappaMode formal_kappa() { return {}; }
  static KappaMode numeric(Rational v) { return {false, std::move(v)}; }
  // "formal" or a rational "p/q".
  static KappaMode parse(const std::string& text);
  RationalFunction scalar() const;
  std::string str() const;
};

enum class SideConvention { Uniform, RootOrdered };

/// Half-sum of positive roots paired with y_1..y_n, plus the calibration
/// variant relating the operator formula to the commutation relations.
///
/// Variant bits:
///   bit 0  negates k in the commutator families (x-y and lattice relations);
///   bit 1  writes x s_ij as x_min(i,j) s_ij (root-ordered) instead of x_j s_ij;
///   bit 2  flips the sign of the rho term in the operator.
struct RhoConvention {
  std::vector<Rational> half_sum;
  int variant = 0;

  static RhoConvention with_variant(int n, int variant);
  static std::vector<Rational> standard_half_sum(int n);  // (n+1-2k)/2

  int kappa_sign() const { return variant & 1 ? -1 : 1; }
  SideConvention side() const { return variant & 2 ? SideConvention::RootOrdered : SideConvention::Uniform; }
  int rho_sign() const { return variant & 4 ? -1 : 1; }
  std::string describe() const;
};

struct RelationInstance {
  std::string family;
  std::vector<int> indices;  // 1-based
  std::optional<Exponent> eta;
  bool pass = false;
};

struct PresentationReport {
  std::string group;
  int n = 0;
  KappaMode kappa;
  RhoConvention convention;
  std::vector<RelationInstance> relations;

  bool overall() const;
  std::size_t failures() const;
  std::string to_json() const;
  std::string to_text() const;
};

// T_y = D_y - rho_sign k <rho,y> + k sum_{i<j} <x_i - x_j, y> x_i/(x_i - x_j) (1 - s_ij)
// on the ambient's Laurent ring. SL ambients require y in t.
OperatorNF dunkl(const Ambient& amb, const CartanVector& y, const RationalFunction& kappa,
                 const RhoConvention& conv);

// Runs the GL relation families at n with formal k for all eight variants.
std::vector<PresentationReport> calibration_scan(int n, const std::vector<Rational>& half_sum);
// The unique variant passing the scan at n = 2, instantiated for n.
// Throws InternalError("convention calibration failed") otherwise.
RhoConvention calibrate_convention(int n);

PresentationReport check_relations(Group group, int n, const KappaMode& kappa, const RhoConvention& conv);

// omega = x^{e_1} sigma on C[T], sigma the n-cycle i -> i+1.
OperatorNF omega_generator(int n);
OperatorNF omega_inverse(int n);
// Action of omega on t, as (linear part sigma(y), constant shift -<e_1, sigma(y)>).
std::pair<CartanVector, Rational> omega_action(const CartanVector& y);

// (1/n!) sum_w w.f
LaurentPoly symmetrize(const LaurentPoly& f);

struct XiGenerator {
  enum Kind { X, Y, S } kind;
  int i = 0;
  int j = 0;  // second index of s_ij
};
// Ambient of the embedding: C[T] (x) C[z^{+-1}].
Ambient xi_ambient(int n);
OperatorNF xi_embed(const XiGenerator& gen, int n, const RationalFunction& kappa, const RhoConvention& conv);
// GL relation families evaluated on the images of the embedding.
PresentationReport check_xi_relations(int n, const KappaMode& kappa, const RhoConvention& conv);

// [T_i, T_j] = 0 for all pairs, sum_i T_i = Euler operator, and
// [T_y, x_1...x_n] = 0 for y in t (GL ambient).
PresentationReport check_commutativity(int n, const KappaMode& kappa, const RhoConvention& conv);

}  // namespace chw
