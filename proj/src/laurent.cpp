#include "chw/laurent.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "chw/error.hpp"

namespace chw {

namespace {
constexpr long kExponentLimit = 1L << 30;

int checked_exponent(long v) {
  if (v > kExponentLimit || v < -kExponentLimit) throw DomainError("exponent overflow");
  return static_cast<int>(v);
}

long floor_mod(long a, long n) { return ((a % n) + n) % n; }
}  // namespace

Exponent sl_normalize(Exponent e) {
  if (e.empty()) return e;
  int m = *std::min_element(e.begin(), e.end());
  for (auto& v : e) v -= m;
  return e;
}

Exponent canonical(const Ambient& amb, Exponent e) {
  if (static_cast<int>(e.size()) != amb.nvars())
    throw DomainError("exponent length " + std::to_string(e.size()) + " does not match " +
                      std::to_string(amb.nvars()) + " variables");
  if (amb.sl() && amb.n > 0) {
    int m = *std::min_element(e.begin(), e.begin() + amb.n);
    for (int i = 0; i < amb.n; ++i) e[i] -= m;
  }
  return e;
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= size() || seen[v]) throw DomainError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto p = identity(n);
  std::swap(p.img_[i], p.img_[j]);
  return p;
}

Permutation Permutation::cycle(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = (i + 1) % n;
  return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  auto p = identity(n).img_;
  do {
    out.push_back(Permutation(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < size(); ++i) v[img_[i]] = i;
  return Permutation(std::move(v));
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) inv += img_[i] > img_[j];
  return inv;
}

std::string Permutation::str() const {
  std::string s = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ',';
    s += std::to_string(img_[i] + 1);
  }
  return s + "]";
}

Permutation operator*(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw DomainError("permutation size mismatch");
  std::vector<int> r(w.size());
  for (int i = 0; i < w.size(); ++i) r[i] = v.img_[w.img_[i]];
  return Permutation(std::move(r));
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(Ambient amb, const RationalFunction& c) {
  return monomial(amb, Exponent(amb.nvars(), 0), c);
}

LaurentPoly LaurentPoly::monomial(Ambient amb, Exponent e, const RationalFunction& c) {
  LaurentPoly p(amb);
  p.add_term(std::move(e), c);
  return p;
}

LaurentPoly LaurentPoly::variable(Ambient amb, int i) {
  Exponent e(amb.nvars(), 0);
  e.at(i) = 1;
  return monomial(amb, std::move(e));
}

RationalFunction LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(canonical(amb_, e));
  return it == terms_.end() ? RationalFunction() : it->second;
}

void LaurentPoly::add_term(Exponent e, const RationalFunction& c) {
  if (c.is_zero()) return;
  e = canonical(amb_, std::move(e));
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (!(amb_ == o.amb_)) throw DomainError("ambient mismatch");
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.amb_ == b.amb_)) throw DomainError("ambient mismatch");
  LaurentPoly r(a.amb_);
  Exponent e(a.amb_.nvars());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k)
        e[k] = checked_exponent(static_cast<long>(ea[k]) + eb[k]);
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::scaled(const RationalFunction& c) const {
  if (c.is_zero()) return LaurentPoly(amb_);
  LaurentPoly r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const {
  LaurentPoly r(amb_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t k = 0; k < f.size(); ++k)
      f[k] = checked_exponent(static_cast<long>(f[k]) + s.at(k));
    r.add_term(std::move(f), c);
  }
  return r;
}

LaurentPoly LaurentPoly::act(const Permutation& w) const {
  if (w.size() != amb_.n) throw DomainError("permutation size does not match ambient");
  LaurentPoly r(amb_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (int i = 0; i < amb_.n; ++i) f[w(i)] = e[i];
    r.terms_.emplace(canonical(amb_, std::move(f)), c);
  }
  return r;
}

LaurentPoly LaurentPoly::specialize(const Rational& value) const {
  LaurentPoly r(amb_);
  for (const auto& [e, c] : terms_) r.add_term(e, c.eval(value));
  return r;
}

namespace {

// Synthetic division of f (GL layout) by (x_a - x_b).
std::optional<LaurentPoly> gl_divide(const LaurentPoly& f, int a, int b) {
  const Ambient& amb = f.ambient();
  if (f.is_zero()) return LaurentPoly(amb);
  std::map<int, LaurentPoly> by_degree;
  for (const auto& [e, c] : f.terms()) {
    Exponent rest = e;
    rest[a] = 0;
    auto it = by_degree.try_emplace(e[a], amb).first;
    it->second.add_term(std::move(rest), c);
  }
  const int lo = by_degree.begin()->first;
  const int hi = by_degree.rbegin()->first;
  Exponent xb(amb.nvars(), 0);
  xb[b] = 1;
  LaurentPoly quotient(amb);
  LaurentPoly carry(amb);  // q_{k} while descending
  for (int k = hi; k > lo; --k) {
    auto it = by_degree.find(k);
    LaurentPoly qk = carry.shifted(xb);
    if (it != by_degree.end()) qk += it->second;
    Exponent xa(amb.nvars(), 0);
    xa[a] = k - 1;
    quotient += qk.shifted(xa);
    carry = std::move(qk);
  }
  LaurentPoly remainder = carry.shifted(xb);
  remainder += by_degree.begin()->second;
  if (!remainder.is_zero()) return std::nullopt;
  return quotient;
}

}  // namespace

std::optional<LaurentPoly> LaurentPoly::divide_by_difference(int a, int b) const {
  if (a == b || a < 0 || b < 0 || a >= amb_.n || b >= amb_.n)
    throw DomainError("bad root index");
  if (!amb_.sl()) return gl_divide(*this, a, b);
  // C[T]: lift each total-degree class mod n to a homogeneous representative
  // of degree r in C[H], divide there, and push the quotient back.
  const int n = amb_.n;
  Ambient gl_amb{n, Torus::GL, amb_.extra};
  std::map<long, LaurentPoly> classes;
  for (const auto& [e, c] : terms_) {
    long deg = 0;
    for (int i = 0; i < n; ++i) deg += e[i];
    long r = floor_mod(deg, n);
    long shift = (r - deg) / n;
    Exponent lifted = e;
    for (int i = 0; i < n; ++i) lifted[i] = checked_exponent(lifted[i] + shift);
    classes.try_emplace(r, gl_amb).first->second.add_term(std::move(lifted), c);
  }
  LaurentPoly out(amb_);
  for (const auto& [r, part] : classes) {
    auto q = gl_divide(part, a, b);
    if (!q) return std::nullopt;
    for (const auto& [e, c] : q->terms()) out.add_term(e, c);
  }
  return out;
}

LaurentPoly laurent_mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

LaurentPoly sn_act(const Permutation& w, const LaurentPoly& f) { return f.act(w); }

LaurentPoly root_difference(const Ambient& amb, int a, int b) {
  return LaurentPoly::variable(amb, a) - LaurentPoly::variable(amb, b);
}

LaurentPoly divided_difference(int i, int j, const LaurentPoly& f) {
  const Ambient& amb = f.ambient();
  if (i == j) throw DomainError("divided difference needs i != j");
  LaurentPoly diff = f - f.act(Permutation::transposition(amb.n, i, j));
  auto q = diff.divide_by_difference(i, j);
  if (!q) throw InternalError("inexact divided difference");
  // 1/(1 - x_i^{-1} x_j) = x_i/(x_i - x_j)
  return LaurentPoly::variable(amb, i) * *q;
}

}  // namespace chw
