#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverfold/matrix.hpp"
#include "quiverfold/partition.hpp"

namespace qf {

/// Two-row slice data for A_{2n-1} with w supported at k and 2n-k.
/// For k = n the involution sigma_n on the 2-dimensional W_n has signature
/// (w_plus, w_minus); `wn_basis` holds a sigma_n eigenbasis of W_n (columns,
/// +1 eigenvectors first) and defaults to the standard basis.
struct SliceSpec {
  int n = 1;
  int k = 1;
  int w_plus = 2;
  int w_minus = 0;
  std::optional<std::vector<size_t>> v;  // full length 2n-1 when present
  std::optional<Matrix> wn_basis;

  bool k_equals_n() const { return k == n; }
  size_t dim() const { return 2 * static_cast<size_t>(n); }
  // Size of R: End(W_n) for k = n, scalars for k < n.
  size_t r() const { return k_equals_n() ? 2 : 1; }
  // Throws std::invalid_argument unless 1 <= k <= n and, when k = n,
  // w_plus + w_minus = 2.
  void validate() const;
};

SliceSpec make_slice_spec(int n, int k, int w_plus = 2, int w_minus = 0);

struct Sl2Triple {
  Matrix E, H, F;
};

// E^[m], H^[m], F^[m] over the scalars.
Sl2Triple sl2_block(size_t m);
Sl2Triple build_triple(const SliceSpec& spec);

// Throws std::invalid_argument on a shape or trace violation.
bool in_slice(const SliceSpec& spec, const Matrix& x);
// jordan_type(x) <= lambda in dominance order; x must be nilpotent.
bool in_orbit_closure(const Matrix& x, const Partition& lambda);

enum class FormType { Symmetric, Skew };
std::string to_string(FormType t);

struct BilinearForm {
  Matrix gram;
  FormType type = FormType::Symmetric;
};

// Skew form <.,.>_n on W_n: antidiagonal (0, 1; -1, 0) in the sigma_n eigenbasis.
Matrix wn_skew_gram();
// Gram matrix of (w, y)_n = <w, sigma_n y>_n in the sigma_n eigenbasis.
Matrix wn_gram(int w_plus, int w_minus);

BilinearForm build_form(const SliceSpec& spec);
// Symmetry type predicted by the case table (k < n: parity of k; k = n:
// parity of n and the signature).
FormType expected_form_type(int n, int k, int w_plus, int w_minus);

// -J^{-1} X^T J.
Matrix theta_big(const BilinearForm& form, const Matrix& x);

// lambda with g^T J g = lambda J, if any.
std::optional<Scalar> form_similitude(const BilinearForm& form, const Matrix& g);

// G_W acting diagonally on the copies of W_k, W_{2n-k} (k < n, alpha has two
// 1x1 blocks) or of W_n (k = n, one 2x2 block in the sigma_n eigenbasis).
Matrix centralizer_embedding(const SliceSpec& spec, const std::vector<Matrix>& alpha);

struct NonemptyReport {
  bool nonempty = false;
  std::vector<int> s;
  int ell = 0;
};

// Throws std::invalid_argument if v is not symmetric of length 2n-1.
NonemptyReport nonempty_typeA(int n, int k, const std::vector<size_t>& v);

}  // namespace qf
