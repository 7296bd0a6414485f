#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "quiverfold/scalar.hpp"

namespace qf {

/// Dense row-major matrix over Scalar. Zero-sized dimensions are allowed and
/// show up constantly (a vertex with v_i = 0 still carries maps).
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(size_t rows, size_t cols, std::vector<Scalar> entries);
  // Row-major integer literal, handy in tests: Matrix::of({{1, 2}, {3, 4}}).
  static Matrix of(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix zero(size_t rows, size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(size_t n);
  static Matrix scalar(size_t n, const Scalar& s);
  static Matrix diagonal(const std::vector<Scalar>& d);
  static Matrix column(const std::vector<Scalar>& v);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return a_; }

  Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  void set_block(size_t r0, size_t c0, const Matrix& b);
  Matrix col(size_t j) const { return block(0, j, rows_, 1); }
  Matrix row(size_t i) const { return block(i, 0, 1, cols_); }

  Matrix transpose() const;
  Matrix pow(unsigned e) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const;
  bool is_identity() const;
  Scalar trace() const;
  // lcm of the field orders of all entries (1 when every entry is rational).
  int field_order() const;

  std::string to_string() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix hstack(const std::vector<Matrix>& parts);
Matrix vstack(const std::vector<Matrix>& parts);
Matrix block_diag(const std::vector<Matrix>& parts);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
// Stacks the columns of m into a single column (column-major vectorization).
Matrix vec(const Matrix& m);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace qf
