#include "quiverfold/random.hpp"

#include "quiverfold/linalg.hpp"

namespace qf {

std::uint64_t Rng::mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::split(std::uint64_t stream) const {
  Rng r(mix(seed_ ^ mix(stream + 1)));
  r.lo_ = lo_;
  r.hi_ = hi_;
  return r;
}

long Rng::uniform_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

Scalar Rng::nonzero_scalar() {
  for (;;) {
    const long v = uniform_int(lo_, hi_);
    if (v != 0) return Scalar(v);
  }
}

Matrix Rng::matrix(size_t rows, size_t cols) {
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = small_scalar();
  return m;
}

Matrix Rng::invertible_matrix(size_t n) {
  for (;;) {
    Matrix m = matrix(n, n);
    if (rank(m) == n) return m;
  }
}

}  // namespace qf
