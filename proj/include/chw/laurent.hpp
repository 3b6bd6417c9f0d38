#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chw/rational_function.hpp"

namespace chw {

/// Which torus the first n variables live on. GL: the full lattice Z^n.
/// SL: Z^n modulo the all-ones vector (the relation x_1...x_n = 1).
enum class Torus { GL, SL };

/// Variable layout of a Laurent ring: n permuted variables x_1..x_n on the
/// chosen torus, followed by `extra` independent GL-type variables that the
/// symmetric group does not touch (used for the C^x factor of the
/// embedding C[H] -> C[T] (x) C[z^{+-1}]).
struct Ambient {
  int n = 1;
  Torus torus = Torus::GL;
  int extra = 0;

  int nvars() const { return n + extra; }
  bool sl() const { return torus == Torus::SL; }
  friend bool operator==(const Ambient&, const Ambient&) = default;

  static Ambient gl(int n) { return {n, Torus::GL, 0}; }
  static Ambient sl(int n) { return {n, Torus::SL, 0}; }
};

using Exponent = std::vector<int>;

// Subtracts the minimum entry from every entry.
Exponent sl_normalize(Exponent e);
// Canonical representative of e in the ambient (SL: first n entries only).
Exponent canonical(const Ambient& amb, Exponent e);

/// Bijection of {0..n-1} stored by images. Composition (v*w)(i) = v(w(i)).
/// Printed and parsed one-based in one-line notation, e.g. "[2,3,1]".
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  // i -> i+1 (mod n), the n-cycle (1 2 ... n).
  static Permutation cycle(int n);
  static std::vector<Permutation> all(int n);  // lexicographic order

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;
  Permutation inverse() const;
  int length() const;  // number of inversions
  std::string str() const;

  friend Permutation operator*(const Permutation& v, const Permutation& w);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

/// Finite sum of monomials x^nu with Q(k) coefficients. No zero coefficient
/// is ever stored; SL exponents are kept with minimum entry 0.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, RationalFunction>;

  explicit LaurentPoly(Ambient amb) : amb_(amb) {}
  static LaurentPoly constant(Ambient amb, const RationalFunction& c);
  static LaurentPoly monomial(Ambient amb, Exponent e, const RationalFunction& c = 1);
  static LaurentPoly variable(Ambient amb, int i);

  const Ambient& ambient() const { return amb_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // Coefficient of x^e (canonicalized first).
  RationalFunction coeff(const Exponent& e) const;

  void add_term(Exponent e, const RationalFunction& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly scaled(const RationalFunction& c) const;
  LaurentPoly shifted(const Exponent& e) const;  // multiply by x^e
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.amb_ == b.amb_ && a.terms_ == b.terms_;
  }

  LaurentPoly act(const Permutation& w) const;

  // Exact quotient by (x_a - x_b), or nullopt when (x_a - x_b) does not divide.
  std::optional<LaurentPoly> divide_by_difference(int a, int b) const;

  // Substitutes k = value in every coefficient.
  LaurentPoly specialize(const Rational& value) const;

 private:
  Ambient amb_;
  Terms terms_;
};

// Named operations.
LaurentPoly laurent_mul(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly sn_act(const Permutation& w, const LaurentPoly& f);
// (f - s_ij f) / (1 - x_i^{-1} x_j), indices 0-based. Throws InternalError if
// the division is inexact, which cannot happen for a Laurent polynomial f.
LaurentPoly divided_difference(int i, int j, const LaurentPoly& f);
// (x_a - x_b) as a Laurent polynomial.
LaurentPoly root_difference(const Ambient& amb, int a, int b);

}  // namespace chw
