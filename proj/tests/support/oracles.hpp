#pragma once

#include <string>
#include <vector>

#include "quiverfold/adhm.hpp"
#include "quiverfold/matrix.hpp"

namespace qf::testing {

// Block matrix over R = r x r matrices; entries given row by row.
inline Matrix blocks(const std::vector<std::vector<Matrix>>& rows) {
  std::vector<Matrix> out;
  for (const auto& row : rows) out.push_back(hstack(row));
  return vstack(out);
}

// Hand-solved first two steps of the k = n recursion, written out from the
// (A)(B)(C) conditions with r1, r2 in R.
struct ClosedForms {
  Matrix M1, N1, M2, N2;
};

inline ClosedForms closed_forms(const Matrix& r1, const Matrix& r2) {
  const size_t r = r1.rows();
  const Matrix one = Matrix::identity(r), zero(r, r);
  const Matrix h = r1 * Scalar(Rational(1, 2));
  const Matrix third = r1 * Scalar(Rational(1, 3));
  const Matrix sixth = r1 * Scalar(Rational(1, 6));
  const Matrix corner = r1 * r1 * Scalar(Rational(1, 9)) + r2 * Scalar(Rational(1, 2));
  return {blocks({{h, one}}), blocks({{one}, {h}}),
          blocks({{third, one, zero}, {corner, sixth, one}}),
          blocks({{one, zero}, {sixth, one}, {corner, third}})};
}

// The forward or backward arrow between adjacent vertices of A_{2n-1}, by
// vertex label.
inline const Matrix& arrow(const AdhmDatum& x, int from, int to) {
  return x.B[x.quiver->arrow_index(std::to_string(from) + "->" + std::to_string(to))];
}

// B along the straight walk from `from` to `to`, composed right to left.
inline Matrix walk(const AdhmDatum& x, int from, int to) {
  const size_t dim = x.v[x.quiver->vertex_index(std::to_string(from))];
  Matrix acc = Matrix::identity(dim);
  const int step = to > from ? 1 : -1;
  for (int i = from; i != to; i += step) acc = arrow(x, i, i + step) * acc;
  return acc;
}

// Delta_s B_{s,turn,t} Gamma_t multiplied out arrow by arrow.
inline Matrix loop(const AdhmDatum& x, int s, int turn, int t) {
  const auto& q = *x.quiver;
  return x.Delta[q.vertex_index(std::to_string(s))] * walk(x, turn, s) * walk(x, t, turn) *
         x.Gamma[q.vertex_index(std::to_string(t))];
}

}  // namespace qf::testing
