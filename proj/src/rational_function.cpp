#include "chw/rational_function.hpp"

#include "chw/error.hpp"

namespace chw {

KPoly::KPoly(Rational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

KPoly::KPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void KPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational KPoly::coeff(int d) const {
  return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : Rational(0);
}

std::size_t KPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& c : c_) n += !c.is_zero();
  return n;
}

Rational KPoly::eval(const Rational& at) const {
  Rational r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
  return r;
}

KPoly KPoly::monic() const {
  if (is_zero()) return *this;
  Rational s = lead().inv();
  KPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

KPoly operator+(const KPoly& a, const KPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return KPoly(std::move(r));
}

KPoly KPoly::operator-() const {
  KPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

KPoly operator-(const KPoly& a, const KPoly& b) { return a + (-b); }

KPoly operator*(const KPoly& a, const KPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return KPoly(std::move(r));
}

void KPoly::divmod(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  r = a;
  if (a.degree() < b.degree()) {
    q = KPoly();
    return;
  }
  std::vector<Rational> qc(a.degree() - b.degree() + 1);
  Rational inv_lead = b.lead().inv();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational f = r.lead() * inv_lead;
    qc[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) r.c_[i + shift] -= f * b.c_[i];
    r.trim();
  }
  q = KPoly(std::move(qc));
}

KPoly KPoly::gcd(KPoly a, KPoly b) {
  while (!b.is_zero()) {
    KPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {
std::string term_str(const Rational& c, int d) {
  if (d == 0) return c.str();
  std::string var = d == 1 ? "k" : "k^" + std::to_string(d);
  if (c.is_one()) return var;
  if (c == Rational(-1)) return "-" + var;
  return c.str() + "*" + var;
}
}  // namespace

std::string KPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t d = 0; d < c_.size(); ++d) {
    if (c_[d].is_zero()) continue;
    std::string t = term_str(c_[d], static_cast<int>(d));
    if (!s.empty() && t.front() != '-') s += '+';
    s += t;
  }
  return s;
}

RationalFunction RationalFunction::normalize(KPoly num, KPoly den) {
  if (den.is_zero()) throw DomainError("division by zero polynomial");
  if (num.is_zero()) return RationalFunction();
  if (den.is_constant()) {
    Rational s = den.lead().inv();
    return RationalFunction(num * KPoly(s), KPoly(Rational(1)), 0);
  }
  KPoly g = KPoly::gcd(num, den);
  KPoly q, r;
  if (g.degree() > 0) {
    KPoly::divmod(num, g, q, r);
    num = q;
    KPoly::divmod(den, g, q, r);
    den = q;
  }
  Rational s = den.lead().inv();
  return RationalFunction(num * KPoly(s), den * KPoly(s), 0);
}

int RationalFunction::monomial_sign() const {
  if (is_zero()) return 0;
  return num_.lead().sign();
}

Rational RationalFunction::eval(const Rational& at) const {
  Rational d = den_.eval(at);
  if (d.is_zero())
    throw DomainError("denominator " + den_.str() + " vanishes at k = " + at.str());
  return num_.eval(at) / d;
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) throw DomainError("division by zero");
  return normalize(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ + o.num_;
    if (num_.is_zero()) den_ = KPoly(Rational(1));
    return *this;
  }
  if (den_ == o.den_) return *this = normalize(num_ + o.num_, den_);
  return *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  return *this = normalize(num_ * o.num_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inv(); }

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, 0); }

std::string RationalFunction::str() const {
  if (den_.is_constant()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace chw
