#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chw/laurent.hpp"

namespace chw {

// ------------------------------------------------------------------------
// Derivation generators.
//
// GL ambient: the Euler fields D_i = x_i d/dx_i, i < n.
// SL ambient: d_i = D_i - D_n, i < n-1 (a basis of the derivations of C[T]).
// Extra variables contribute one Euler field each, after the above.
// ------------------------------------------------------------------------

int derivation_count(const Ambient& amb);
// Eigenvalue of generator g on the monomial x^e.
long generator_eigenvalue(const Ambient& amb, int g, const Exponent& e);
// Applies generator g to a Laurent polynomial.
LaurentPoly apply_generator(int g, const LaurentPoly& f);
// Derivation multi-index over the generators.
using DerivMono = std::vector<int>;

// Index of the pair (i, j), i < j, in lexicographic order of pairs.
int pair_index(int n, int i, int j);
const std::vector<std::pair<int, int>>& root_pairs(int n);

/// numerator / prod_{i<j} (x_i - x_j)^{e_ij}, reduced: no (x_i - x_j) with a
/// positive exponent divides the numerator. Representation is canonical.
class LocalizedCoeff {
 public:
  explicit LocalizedCoeff(Ambient amb);
  LocalizedCoeff(LaurentPoly numerator);  // NOLINT(google-explicit-constructor)
  LocalizedCoeff(LaurentPoly numerator, std::vector<int> denominators);

  const Ambient& ambient() const { return num_.ambient(); }
  const LaurentPoly& numerator() const { return num_; }
  const std::vector<int>& denominators() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;

  friend LocalizedCoeff operator+(const LocalizedCoeff& a, const LocalizedCoeff& b);
  friend LocalizedCoeff operator-(const LocalizedCoeff& a, const LocalizedCoeff& b);
  friend LocalizedCoeff operator*(const LocalizedCoeff& a, const LocalizedCoeff& b);
  LocalizedCoeff operator-() const;
  LocalizedCoeff scaled(const RationalFunction& c) const;
  friend bool operator==(const LocalizedCoeff& a, const LocalizedCoeff& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  static LocalizedCoeff sum(const std::vector<LocalizedCoeff>& parts, const Ambient& amb);

  LocalizedCoeff act(const Permutation& w) const;
  LocalizedCoeff derive(int g) const;

  // Multiplies numerator and denominators back out and reduces again;
  // used to test that reduction is a fixed point.
  LocalizedCoeff rereduced() const;

  std::string str() const;

 private:
  void reduce();
  LaurentPoly num_;
  std::vector<int> den_;
};

struct OpKey {
  Permutation w;
  DerivMono m;
  friend auto operator<=>(const OpKey&, const OpKey&) = default;
  friend bool operator==(const OpKey&, const OpKey&) = default;
};

/// Element of L<D> x| S_n in the normal order  coefficient * D^m * w.
class OperatorNF {
 public:
  using Terms = std::map<OpKey, LocalizedCoeff>;

  explicit OperatorNF(Ambient amb) : amb_(amb) {}
  static OperatorNF identity(const Ambient& amb);
  static OperatorNF scalar(const Ambient& amb, const RationalFunction& c);
  static OperatorNF multiplication(const LocalizedCoeff& c);
  static OperatorNF permutation(const Ambient& amb, const Permutation& w);
  static OperatorNF generator(const Ambient& amb, int g);
  // D_y = sum_k y_k D_k. SL ambient requires sum y_k = 0.
  static OperatorNF derivation_along(const Ambient& amb, const std::vector<Rational>& y);

  const Ambient& ambient() const { return amb_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const OpKey& key, const LocalizedCoeff& c);

  OperatorNF& operator+=(const OperatorNF& o);
  OperatorNF& operator-=(const OperatorNF& o);
  friend OperatorNF operator+(OperatorNF a, const OperatorNF& b) { return a += b; }
  friend OperatorNF operator-(OperatorNF a, const OperatorNF& b) { return a -= b; }
  friend OperatorNF operator*(const OperatorNF& a, const OperatorNF& b);
  OperatorNF operator-() const;
  OperatorNF scaled(const RationalFunction& c) const;
  friend bool operator==(const OperatorNF& a, const OperatorNF& b) {
    return a.amb_ == b.amb_ && a.terms_ == b.terms_;
  }

  // Image of f. Throws DomainError("image not polynomial") when some
  // localized denominator survives.
  LaurentPoly apply(const LaurentPoly& f) const;

  std::string str() const;

 private:
  Ambient amb_;
  Terms terms_;
};

OperatorNF op_mul(const OperatorNF& a, const OperatorNF& b);
LaurentPoly op_apply(const OperatorNF& a, const LaurentPoly& f);
bool op_is_zero(const OperatorNF& a);
OperatorNF commutator(const OperatorNF& a, const OperatorNF& b);
OperatorNF power(const OperatorNF& a, int e);

}  // namespace chw
