#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chw/dual_number.hpp"
#include "chw/error.hpp"
#include "chw/rational.hpp"

namespace chw {

/// Dense row-major matrix over an exact scalar type (Rational or DualNumber).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows_; ++r) {
      if (static_cast<int>(rows[r].size()) != m.cols_) throw DomainError("ragged matrix rows");
      for (int c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }
  // Outer product of a column and a row vector.
  static Matrix outer(const std::vector<T>& col, const std::vector<T>& row) {
    Matrix m(static_cast<int>(col.size()), static_cast<int>(row.size()));
    for (int r = 0; r < m.rows_; ++r)
      for (int c = 0; c < m.cols_; ++c) m(r, c) = col[r] * row[c];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  T& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<T> column(int c) const {
    std::vector<T> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  std::vector<T> row(int r) const {
    return std::vector<T>(a_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                          a_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  T trace() const {
    T s{};
    for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& v : m.a_) v = -v;
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
      for (int k = 0; k < a.cols_; ++k) {
        const T& ark = a(r, k);
        if (ark.is_zero()) continue;
        for (int c = 0; c < b.cols_; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != static_cast<int>(v.size())) throw DomainError("matrix-vector dimension mismatch");
    std::vector<T> out(a.rows_);
    for (int r = 0; r < a.rows_; ++r)
      for (int c = 0; c < a.cols_; ++c) out[r] += a(r, c) * v[c];
    return out;
  }
  Matrix scaled(const T& s) const {
    Matrix m = *this;
    for (auto& v : m.a_) v *= s;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  Matrix pow(int e) const {
    if (!square()) throw DomainError("power of a non-square matrix");
    if (e < 0) throw DomainError("negative matrix power");
    Matrix r = identity(rows_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch");
  }
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;
using DMatrix = Matrix<DualNumber>;

// Horner evaluation of sum_m coeffs[m] X^m.
template <class T>
Matrix<T> poly_eval(const std::vector<Rational>& coeffs, const Matrix<T>& x) {
  Matrix<T> acc(x.rows(), x.cols());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + Matrix<T>::identity(x.rows()).scaled(T(*it));
  return acc;
}

}  // namespace chw
