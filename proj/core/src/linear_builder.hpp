#pragma once

#include <vector>

#include "quiverfold/matrix.hpp"

namespace qf::detail {

// Assembles a linear system whose unknowns are the entries of several
// matrix-shaped blocks, with equations given as matrix identities.
class LinearBuilder {
 public:
  struct Block {
    size_t offset, rows, cols;
  };

  Block add_unknown(size_t rows, size_t cols) {
    Block b{unknowns_, rows, cols};
    unknowns_ += rows * cols;
    return b;
  }
  Block add_equation(size_t rows, size_t cols) {
    Block b{equations_, rows, cols};
    equations_ += rows * cols;
    rhs_blocks_.push_back({b, Matrix(rows, cols)});
    return b;
  }

  // equation += sign * L * U * R, with U the unknown block.
  void add_term(const Block& eq, const Matrix& left, const Block& u, const Matrix& right, int sign = 1) {
    for (size_t a = 0; a < eq.rows; ++a)
      for (size_t p = 0; p < u.rows; ++p) {
        const Scalar& l = left(a, p);
        if (l.is_zero()) continue;
        for (size_t q = 0; q < u.cols; ++q)
          for (size_t b = 0; b < eq.cols; ++b) {
            const Scalar& r = right(q, b);
            if (r.is_zero()) continue;
            push(eq.offset + a * eq.cols + b, u.offset + p * u.cols + q, sign > 0 ? l * r : -(l * r));
          }
      }
  }
  // equation += sign * U * R
  void add_right(const Block& eq, const Block& u, const Matrix& right, int sign = 1) {
    for (size_t a = 0; a < eq.rows; ++a)
      for (size_t q = 0; q < u.cols; ++q)
        for (size_t b = 0; b < eq.cols; ++b) {
          const Scalar& r = right(q, b);
          if (!r.is_zero()) push(eq.offset + a * eq.cols + b, u.offset + a * u.cols + q, sign > 0 ? r : -r);
        }
  }
  // equation += sign * L * U
  void add_left(const Block& eq, const Matrix& left, const Block& u, int sign = 1) {
    for (size_t a = 0; a < eq.rows; ++a)
      for (size_t p = 0; p < u.rows; ++p) {
        const Scalar& l = left(a, p);
        if (l.is_zero()) continue;
        for (size_t b = 0; b < eq.cols; ++b) push(eq.offset + a * eq.cols + b, u.offset + p * u.cols + b, sign > 0 ? l : -l);
      }
  }
  // Constant part: equation = ... = rhs (moved to the right-hand side).
  void set_rhs(const Block& eq, const Matrix& rhs) {
    for (auto& [b, m] : rhs_blocks_)
      if (b.offset == eq.offset) m = rhs;
  }

  size_t unknowns() const { return unknowns_; }
  size_t equations() const { return equations_; }

  Matrix matrix() const {
    Matrix a(equations_, unknowns_);
    for (const auto& [i, j, s] : entries_) a(i, j) += s;
    return a;
  }
  Matrix rhs() const {
    Matrix r(equations_, 1);
    for (const auto& [b, m] : rhs_blocks_)
      for (size_t i = 0; i < b.rows; ++i)
        for (size_t j = 0; j < b.cols; ++j) r(b.offset + i * b.cols + j, 0) = m(i, j);
    return r;
  }

  static Matrix unpack(const Matrix& solution, const Block& u) {
    Matrix m(u.rows, u.cols);
    for (size_t i = 0; i < u.rows; ++i)
      for (size_t j = 0; j < u.cols; ++j) m(i, j) = solution(u.offset + i * u.cols + j, 0);
    return m;
  }

 private:
  struct Entry {
    size_t row, col;
    Scalar value;
  };
  void push(size_t i, size_t j, Scalar s) { entries_.push_back({i, j, std::move(s)}); }

  size_t unknowns_ = 0;
  size_t equations_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::pair<Block, Matrix>> rhs_blocks_;
};

}  // namespace qf::detail
