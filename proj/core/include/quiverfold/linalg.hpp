#pragma once

#include <optional>
#include <vector>

#include "quiverfold/matrix.hpp"

namespace qf {

struct RowEchelon {
  Matrix reduced;             // reduced row echelon form
  std::vector<size_t> pivots; // pivot column of each nonzero row
};

// Gauss-Jordan elimination; the pivot is always the first nonzero entry of
// the column, so results are reproducible.
RowEchelon rref(Matrix a);

size_t rank(const Matrix& a);

// Basis of ker(a), one column per basis vector. Basis vectors are the
// standard free-variable solutions, so each has a 1 in its free coordinate.
Matrix kernel_basis(const Matrix& a);

// Basis of the column space, as columns of a (pivot columns).
Matrix column_basis(const Matrix& a);

struct AffineSolution {
  Matrix particular;  // one solution, free variables set to zero
  Matrix kernel;      // basis of ker(A), as columns
};

// All X with A*X = B, or nullopt if inconsistent. B may have several columns.
std::optional<AffineSolution> solve_linear(const Matrix& a, const Matrix& b);

std::optional<Matrix> try_inverse(const Matrix& a);
// Throws std::domain_error on singular input.
Matrix inverse(const Matrix& a);
Scalar determinant(const Matrix& a);

// Basis (as columns) of ker(M - zeta I).
Matrix eigenspace(const Matrix& m, const Scalar& zeta);

}  // namespace qf
