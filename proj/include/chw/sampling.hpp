#pragma once

#include <cstdint>
#include <random>

#include "chw/matrix.hpp"

namespace chw {

// SplitMix64 finalizer: derives independent stream seeds from (seed, index),
// so parallel samples are reproducible regardless of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}
  std::mt19937_64& engine() { return gen_; }

  long integer(long lo, long hi);  // inclusive
  bool coin(double p = 0.5);
  // Small rational: numerator in [-bound, bound], denominator in {1, 2}.
  Rational rational(long bound = 3);
  Rational nonzero_rational(long bound = 3);
  QVector vector(int n, long bound = 3);
  // Random vector with each coordinate zero with probability 1/2.
  QVector sparse_vector(int n, long bound = 3);
  QMatrix matrix(int rows, int cols, long bound = 3);
  // Random invertible matrix with small integer entries.
  QMatrix invertible(int n, long bound = 2);

 private:
  std::mt19937_64 gen_;
};

}  // namespace chw
