#include "chw/linalg.hpp"

#include <algorithm>
#include <set>

namespace chw {

RowEchelon rref(QMatrix m) {
  RowEchelon out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    Rational inv = m(r, c).inv();
    for (int k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (int k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const QMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

Rational det(QMatrix m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const int n = m.rows();
  Rational d(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      d = -d;
    }
    d *= m(c, c);
    Rational inv = m(c, c).inv();
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) * inv;
      for (int k = c; k < n; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return d;
}

std::vector<QVector> kernel(const QMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.square()) throw DomainError("inverse of a non-square matrix");
  const int n = m.rows();
  QMatrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = rref(aug);
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) throw DomainError("singular matrix");
  QMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw DomainError("right-hand side has wrong length");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  QVector z(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) z[e.pivots[r]] = e.reduced(static_cast<int>(r), m.cols());
  return z;
}

QMatrix from_columns(const std::vector<QVector>& cols, int dim) {
  QMatrix m(dim, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < dim; ++r) m(r, static_cast<int>(c)) = cols[c].at(r);
  return m;
}

std::vector<QVector> independent_subset(const std::vector<QVector>& vs, int dim) {
  if (vs.empty()) return {};
  RowEchelon e = rref(from_columns(vs, dim));
  std::vector<QVector> out;
  for (int c : e.pivots) out.push_back(vs[c]);
  return out;
}

bool in_span(const std::vector<QVector>& basis, const QVector& v, int dim) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
  return solve(from_columns(basis, dim), v).has_value();
}

std::vector<Rational> charpoly(const QMatrix& m) {
  if (!m.square()) throw DomainError("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const int n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk + QMatrix::identity(n).scaled(c[n - k + 1]);
    c[n - k] = -(m * mk).trace() / Rational(k);
  }
  return c;
}

namespace {

constexpr unsigned long kDivisorSearchLimit = 1000000000000UL;

std::vector<mpz_class> divisors(const mpz_class& value) {
  mpz_class a = abs(value);
  if (a > kDivisorSearchLimit) throw DomainError("needs field extension");
  unsigned long v = a.get_ui();
  std::vector<mpz_class> out;
  for (unsigned long d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.emplace_back(d);
      if (d * d != v) out.emplace_back(v / d);
    }
  return out;
}

Rational eval_poly(const std::vector<Rational>& p, const Rational& t) {
  Rational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(std::vector<Rational> poly) {
  while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
  if (poly.size() <= 1) return {};
  std::set<Rational> roots;
  std::size_t shift = 0;
  while (shift < poly.size() && poly[shift].is_zero()) ++shift;
  if (shift) {
    roots.insert(Rational(0));
    poly.erase(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (poly.size() > 1) {
    mpz_class l = 1;
    for (const auto& c : poly) l = lcm(l, c.denominator());
    std::vector<mpz_class> ints;
    for (const auto& c : poly) ints.push_back(mpq_class(c.raw() * l).get_num());
    mpz_class g = 0;
    for (const auto& v : ints) g = gcd(g, v);
    for (auto& v : ints) v /= g;
    auto ps = divisors(ints.front()), qs = divisors(ints.back());
    for (const auto& p : ps)
      for (const auto& q : qs)
        for (int s : {1, -1}) {
          Rational cand(mpq_class(p * s, q));
          if (eval_poly(poly, cand).is_zero()) roots.insert(cand);
        }
  }
  return {roots.begin(), roots.end()};
}

Rational charpoly_discriminant(const QMatrix& m) {
  const int n = m.rows();
  std::vector<Rational> p(2 * n - 1);
  QMatrix pw = QMatrix::identity(n);
  for (int k = 0; k < 2 * n - 1; ++k) {
    p[k] = pw.trace();
    pw = pw * m;
  }
  QMatrix h(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) h(a, b) = p[a + b];
  return det(h);
}

}  // namespace chw
