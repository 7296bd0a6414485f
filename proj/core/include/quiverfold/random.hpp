#pragma once

#include <cstdint>
#include <random>

#include "quiverfold/matrix.hpp"

namespace qf {

/// Seeded generator with deterministic child streams. split(k) depends only
/// on the construction seed and k, never on how much has been drawn, so a
/// per-trial seed is enough to replay a trial in isolation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

  std::uint64_t seed() const { return seed_; }
  Rng split(std::uint64_t stream) const;
  static std::uint64_t mix(std::uint64_t x);

  long uniform_int(long lo, long hi);
  Scalar small_scalar() { return Scalar(uniform_int(lo_, hi_)); }
  Scalar nonzero_scalar();
  Matrix matrix(size_t rows, size_t cols);
  Matrix invertible_matrix(size_t n);
  void set_range(long lo, long hi) { lo_ = lo; hi_ = hi; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
  long lo_ = -3;
  long hi_ = 3;
};

}  // namespace qf
