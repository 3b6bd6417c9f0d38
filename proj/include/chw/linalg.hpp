#pragma once

#include <optional>
#include <vector>

#include "chw/matrix.hpp"

namespace chw {

struct RowEchelon {
  QMatrix reduced;          // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(QMatrix m);
int rank(const QMatrix& m);
Rational det(QMatrix m);
// Basis of the null space, one vector per free column, in column order.
std::vector<QVector> kernel(const QMatrix& m);
QMatrix inverse(const QMatrix& m);  // DomainError when singular
// Some solution of m z = b, or nullopt when inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);
// Matrix whose columns are the given vectors.
QMatrix from_columns(const std::vector<QVector>& cols, int dim);
// Basis of the column span (a subset of the given vectors, in order).
std::vector<QVector> independent_subset(const std::vector<QVector>& vs, int dim);
bool in_span(const std::vector<QVector>& basis, const QVector& v, int dim);

// Monic characteristic polynomial det(t - M), ascending coefficients.
std::vector<Rational> charpoly(const QMatrix& m);
// Distinct rational roots of a polynomial (ascending coefficients), sorted.
// Throws DomainError("needs field extension") when the coefficients are too
// large for the divisor search.
std::vector<Rational> rational_roots(std::vector<Rational> poly);
// Discriminant of the characteristic polynomial: det of [tr M^(a+b)].
Rational charpoly_discriminant(const QMatrix& m);

}  // namespace chw
