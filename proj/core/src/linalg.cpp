#include "quiverfold/linalg.hpp"

#include <stdexcept>

namespace qf {

RowEchelon rref(Matrix a) {
  const size_t m = a.rows(), n = a.cols();
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t p = r;
    while (p < m && a(p, c).is_zero()) ++p;
    if (p == m) continue;
    if (p != r)
      for (size_t j = c; j < n; ++j) std::swap(a(p, j), a(r, j));
    const Scalar inv = a(r, c).inverse();
    if (!inv.is_one())
      for (size_t j = c; j < n; ++j)
        if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (size_t j = c; j < n; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

namespace {

Matrix kernel_from_rref(const RowEchelon& e, size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  Matrix k(n, n - e.pivots.size());
  size_t col = 0;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    k(f, col) = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.reduced(r, f).is_zero()) k(e.pivots[r], col) = -e.reduced(r, f);
    ++col;
  }
  return k;
}

}  // namespace

Matrix kernel_basis(const Matrix& a) { return kernel_from_rref(rref(a), a.cols()); }

Matrix column_basis(const Matrix& a) {
  const auto e = rref(a);
  Matrix b(a.rows(), e.pivots.size());
  for (size_t k = 0; k < e.pivots.size(); ++k) b.set_block(0, k, a.col(e.pivots[k]));
  return b;
}

std::optional<AffineSolution> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: A and b have different row counts");
  const size_t n = a.cols();
  const auto e = rref(hstack({a, b}));
  // A pivot inside the b block means 0 = nonzero.
  for (size_t p : e.pivots)
    if (p >= n) return std::nullopt;
  AffineSolution s{Matrix(n, b.cols()), Matrix()};
  for (size_t r = 0; r < e.pivots.size(); ++r)
    for (size_t j = 0; j < b.cols(); ++j) s.particular(e.pivots[r], j) = e.reduced(r, n + j);
  RowEchelon left{e.reduced.block(0, 0, e.reduced.rows(), n), e.pivots};
  s.kernel = kernel_from_rref(left, n);
  return s;
}

std::optional<Matrix> try_inverse(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const size_t n = a.rows();
  const auto e = rref(hstack({a, Matrix::identity(n)}));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Matrix inverse(const Matrix& a) {
  auto inv = try_inverse(a);
  if (!inv) throw std::domain_error("inverse: matrix is singular");
  return *inv;
}

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  Matrix m = a;
  const size_t n = m.rows();
  Scalar det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = m(c, c).inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix eigenspace(const Matrix& m, const Scalar& zeta) {
  if (!m.is_square()) throw std::invalid_argument("eigenspace: matrix is not square");
  return kernel_basis(m - Matrix::scalar(m.rows(), zeta));
}

}  // namespace qf
