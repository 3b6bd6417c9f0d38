#include "chw/sampling.hpp"

#include "chw/linalg.hpp"

namespace chw {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(gen_); }

Rational Sampler::rational(long bound) { return Rational(integer(-bound, bound), integer(1, 2)); }

Rational Sampler::nonzero_rational(long bound) {
  for (;;) {
    Rational r = rational(bound);
    if (!r.is_zero()) return r;
  }
}

QVector Sampler::vector(int n, long bound) {
  QVector v(n);
  for (auto& x : v) x = rational(bound);
  return v;
}

QVector Sampler::sparse_vector(int n, long bound) {
  QVector v(n);
  for (auto& x : v)
    if (coin()) x = nonzero_rational(bound);
  return v;
}

QMatrix Sampler::matrix(int rows, int cols, long bound) {
  QMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rational(bound);
  return m;
}

QMatrix Sampler::invertible(int n, long bound) {
  for (;;) {
    QMatrix g(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) g(r, c) = integer(-bound, bound);
    if (!det(g).is_zero()) return g;
  }
}

}  // namespace chw
