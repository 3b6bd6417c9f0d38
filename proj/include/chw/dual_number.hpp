#pragma once

#include <string>

#include "chw/rational.hpp"

namespace chw {

// a + b*eps with eps^2 = 0. Exact first-order oracle for derivative checks.
class DualNumber {
 public:
  DualNumber() = default;
  DualNumber(Rational value, Rational eps = Rational(0))  // NOLINT
      : value_(std::move(value)), eps_(std::move(eps)) {}
  DualNumber(long v) : value_(v) {}  // NOLINT

  const Rational& value() const { return value_; }
  const Rational& eps() const { return eps_; }
  bool is_zero() const { return value_.is_zero() && eps_.is_zero(); }

  // Only units (value != 0) are invertible.
  DualNumber inv() const;

  DualNumber& operator+=(const DualNumber& o) { value_ += o.value_; eps_ += o.eps_; return *this; }
  DualNumber& operator-=(const DualNumber& o) { value_ -= o.value_; eps_ -= o.eps_; return *this; }
  DualNumber& operator*=(const DualNumber& o) {
    eps_ = value_ * o.eps_ + eps_ * o.value_;
    value_ *= o.value_;
    return *this;
  }
  DualNumber& operator/=(const DualNumber& o) { return *this *= o.inv(); }
  friend DualNumber operator+(DualNumber a, const DualNumber& b) { return a += b; }
  friend DualNumber operator-(DualNumber a, const DualNumber& b) { return a -= b; }
  friend DualNumber operator*(DualNumber a, const DualNumber& b) { return a *= b; }
  friend DualNumber operator/(DualNumber a, const DualNumber& b) { return a /= b; }
  DualNumber operator-() const { return {-value_, -eps_}; }
  friend bool operator==(const DualNumber&, const DualNumber&) = default;

  std::string str() const { return value_.str() + "+" + eps_.str() + "*e"; }

 private:
  Rational value_, eps_;
};

inline DualNumber DualNumber::inv() const {
  Rational vi = value_.inv();  // throws for non-units
  return {vi, -eps_ * vi * vi};
}

}  // namespace chw
