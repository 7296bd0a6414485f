#include "quiverfold/matrix.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qf {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Matrix::Matrix(size_t rows, size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  require(a_.size() == rows * cols, "Matrix: entry count does not match shape");
}

Matrix Matrix::of(std::initializer_list<std::initializer_list<Scalar>> rows) {
  const size_t r = rows.size();
  const size_t c = r ? rows.begin()->size() : 0;
  std::vector<Scalar> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    require(row.size() == c, "Matrix::of: ragged rows");
    e.insert(e.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(e));
}

Matrix Matrix::identity(size_t n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(size_t n, const Scalar& s) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
  Matrix m(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) { return Matrix(v.size(), 1, v); }

Matrix Matrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "Matrix::block: out of range");
  Matrix b(nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(size_t r0, size_t c0, const Matrix& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "Matrix::set_block: out of range");
  for (size_t i = 0; i < b.rows_; ++i)
    for (size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::pow(unsigned e) const {
  require(is_square(), "Matrix::pow: not square");
  Matrix r = identity(rows_);
  Matrix b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "Matrix::+: shape mismatch");
  for (size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "Matrix::-: shape mismatch");
  for (size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  if (s.is_one()) return *this;
  for (auto& x : a_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.a_)
    if (!x.is_zero()) x = -x;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, "Matrix::*: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i) {
    for (size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

Scalar Matrix::trace() const {
  require(is_square(), "Matrix::trace: not square");
  Scalar t;
  for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

int Matrix::field_order() const {
  int l = 1;
  for (const auto& x : a_) l = std::lcm(l, x.order());
  return l;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

Matrix hstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return {};
  const size_t r = parts.front().rows();
  size_t c = 0;
  for (const auto& p : parts) {
    require(p.rows() == r, "hstack: row mismatch");
    c += p.cols();
  }
  Matrix m(r, c);
  size_t off = 0;
  for (const auto& p : parts) {
    m.set_block(0, off, p);
    off += p.cols();
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return {};
  const size_t c = parts.front().cols();
  size_t r = 0;
  for (const auto& p : parts) {
    require(p.cols() == c, "vstack: column mismatch");
    r += p.rows();
  }
  Matrix m(r, c);
  size_t off = 0;
  for (const auto& p : parts) {
    m.set_block(off, 0, p);
    off += p.rows();
  }
  return m;
}

Matrix block_diag(const std::vector<Matrix>& parts) {
  size_t r = 0, c = 0;
  for (const auto& p : parts) {
    r += p.rows();
    c += p.cols();
  }
  Matrix m(r, c);
  size_t ro = 0, co = 0;
  for (const auto& p : parts) {
    m.set_block(ro, co, p);
    ro += p.rows();
    co += p.cols();
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) m.set_block(i * b.rows(), j * b.cols(), b * a(i, j));
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix vec(const Matrix& m) {
  Matrix v(m.rows() * m.cols(), 1);
  for (size_t j = 0; j < m.cols(); ++j)
    for (size_t i = 0; i < m.rows(); ++i) v(j * m.rows() + i, 0) = m(i, j);
  return v;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << ']';
}

}  // namespace qf
