#pragma once

#include <string>
#include <vector>

#include "chw/rational.hpp"

namespace chw {

/// Univariate polynomial in the deformation parameter k over Q.
/// Coefficients are stored in ascending degree with no trailing zeros.
class KPoly {
 public:
  KPoly() = default;
  KPoly(Rational c);  // NOLINT(google-explicit-constructor)
  explicit KPoly(std::vector<Rational> coeffs);
  static KPoly k() { return KPoly(std::vector<Rational>{0, 1}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& lead() const { return c_.back(); }
  Rational coeff(int d) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  std::size_t term_count() const;

  Rational eval(const Rational& at) const;
  KPoly monic() const;

  friend KPoly operator+(const KPoly& a, const KPoly& b);
  friend KPoly operator-(const KPoly& a, const KPoly& b);
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  KPoly operator-() const;
  friend bool operator==(const KPoly& a, const KPoly& b) = default;

  // Euclidean division; throws DomainError on a zero divisor.
  static void divmod(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r);
  static KPoly gcd(KPoly a, KPoly b);  // monic, gcd(0,0) = 0

  // Ascending-degree text: "1+1/2*k", "-k^2".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Element of Q(k): numerator/denominator, coprime, denominator monic.
/// Equality is representation equality.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Rational(c)) {}              // NOLINT
  RationalFunction(KPoly p) : num_(std::move(p)), den_(Rational(1)) {}     // NOLINT
  static RationalFunction kappa() { return RationalFunction(KPoly::k()); }

  // Reduces num/den. Throws DomainError("division by zero polynomial") when den = 0.
  static RationalFunction normalize(KPoly num, KPoly den);

  const KPoly& num() const { return num_; }
  const KPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == KPoly(Rational(1)); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.coeff(0); }  // valid when is_constant()
  // True when the value is c*k^d for a single rational c (including 0).
  bool is_monomial() const { return den_.is_constant() && num_.term_count() <= 1; }
  // Sign of the leading coefficient of a monomial value; 0 for zero.
  int monomial_sign() const;

  // Evaluation at a rational point; errors if the denominator vanishes there.
  Rational eval(const Rational& at) const;
  RationalFunction inv() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  // "1+1/2*k" or "(k+1)/(k-2)".
  std::string str() const;

 private:
  RationalFunction(KPoly num, KPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  KPoly num_, den_;
};

}  // namespace chw
