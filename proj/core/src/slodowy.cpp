#include "quiverfold/slodowy.hpp"

#include <stdexcept>

#include "quiverfold/linalg.hpp"

namespace qf {

void SliceSpec::validate() const {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("slice spec: need 1 <= k <= n");
  if (k == n && (w_plus < 0 || w_minus < 0 || w_plus + w_minus != 2))
    throw std::invalid_argument("slice spec: w_plus + w_minus must be 2 when k = n");
  if (v && v->size() != 2 * static_cast<size_t>(n) - 1)
    throw std::invalid_argument("slice spec: v must have length 2n-1");
  if (wn_basis && (wn_basis->rows() != 2 || wn_basis->cols() != 2))
    throw std::invalid_argument("slice spec: W_n basis must be 2x2");
}

SliceSpec make_slice_spec(int n, int k, int w_plus, int w_minus) {
  SliceSpec s;
  s.n = n;
  s.k = k;
  s.w_plus = k == n ? w_plus : 0;
  s.w_minus = k == n ? w_minus : 0;
  s.validate();
  return s;
}

Sl2Triple sl2_block(size_t size) {
  Sl2Triple t{Matrix(size, size), Matrix(size, size), Matrix(size, size)};
  if (size == 0) return t;
  const long m = static_cast<long>(size) - 1;
  for (size_t i = 0; i < size; ++i) {
    t.H(i, i) = Scalar(m - 2 * static_cast<long>(i));
    if (i + 1 < size) {
      t.E(i, i + 1) = 1;
      const long a = static_cast<long>(i) + 1;
      t.F(i + 1, i) = Scalar(a * (m + 1 - a));
    }
  }
  return t;
}

Sl2Triple build_triple(const SliceSpec& spec) {
  spec.validate();
  if (spec.k_equals_n()) {
    const auto b = sl2_block(static_cast<size_t>(spec.n));
    const Matrix id = Matrix::identity(2);
    return {kron(b.E, id), kron(b.H, id), kron(b.F, id)};
  }
  const auto a = sl2_block(static_cast<size_t>(spec.k));
  const auto b = sl2_block(static_cast<size_t>(2 * spec.n - spec.k));
  return {block_diag({a.E, b.E}), block_diag({a.H, b.H}), block_diag({a.F, b.F})};
}

bool in_slice(const SliceSpec& spec, const Matrix& x) {
  if (x.rows() != spec.dim() || x.cols() != spec.dim())
    throw std::invalid_argument("in_slice: expected a " + std::to_string(spec.dim()) + "x" +
                                std::to_string(spec.dim()) + " matrix");
  if (!x.trace().is_zero()) throw std::invalid_argument("in_slice: matrix is not traceless");
  const auto t = build_triple(spec);
  return commutator(x - t.E, t.F).is_zero() && is_nilpotent(x);
}

bool in_orbit_closure(const Matrix& x, const Partition& lambda) {
  return dominance_leq(jordan_type_nilpotent(x), lambda);
}

std::string to_string(FormType t) { return t == FormType::Symmetric ? "symmetric" : "skew"; }

Matrix wn_skew_gram() { return Matrix::of({{0, 1}, {-1, 0}}); }

Matrix wn_gram(int w_plus, int w_minus) {
  if (w_plus + w_minus != 2) throw std::invalid_argument("wn_gram: signature must sum to 2");
  std::vector<Scalar> d;
  for (int i = 0; i < w_plus; ++i) d.emplace_back(1);
  for (int i = 0; i < w_minus; ++i) d.emplace_back(-1);
  return wn_skew_gram() * Matrix::diagonal(d);
}

BilinearForm build_form(const SliceSpec& spec) {
  spec.validate();
  const size_t dim = spec.dim();
  BilinearForm f;
  f.gram = Matrix(dim, dim);
  if (spec.k_equals_n()) {
    const Matrix g = wn_gram(spec.w_plus, spec.w_minus);
    const size_t n = static_cast<size_t>(spec.n);
    for (size_t i = 1; i <= n; ++i) {
      const Scalar sign = (i - 1) % 2 == 0 ? 1 : -1;
      f.gram.set_block(2 * (i - 1), 2 * (n - i), g * sign);
    }
  } else {
    const long n = spec.n, k = spec.k;
    for (long i = 1; i <= k; ++i) f.gram(i - 1, k - i) = (i - 1) % 2 == 0 ? 1 : -1;
    for (long i = 1; i <= 2 * n - k; ++i)
      f.gram(k + i - 1, k + (2 * n - k - i)) = (n - k + i) % 2 == 0 ? 1 : -1;
  }
  if (f.gram.transpose() == f.gram) {
    f.type = FormType::Symmetric;
  } else if (f.gram.transpose() == -f.gram) {
    f.type = FormType::Skew;
  } else {
    throw std::logic_error("build_form: Gram matrix is neither symmetric nor skew");
  }
  return f;
}

FormType expected_form_type(int n, int k, int w_plus, int w_minus) {
  if (k < n) return k % 2 == 0 ? FormType::Skew : FormType::Symmetric;
  const bool mixed = w_plus == 1 && w_minus == 1;
  const bool even = n % 2 == 0;
  return (even == mixed) ? FormType::Skew : FormType::Symmetric;
}

Matrix theta_big(const BilinearForm& form, const Matrix& x) {
  return -(inverse(form.gram) * x.transpose() * form.gram);
}

std::optional<Scalar> form_similitude(const BilinearForm& form, const Matrix& g) {
  const Matrix lhs = g.transpose() * form.gram * g;
  const Matrix& j = form.gram;
  for (size_t k = 0; k < j.entries().size(); ++k) {
    if (j.entries()[k].is_zero()) continue;
    const Scalar lambda = lhs.entries()[k] / j.entries()[k];
    if (lhs == j * lambda) return lambda;
    return std::nullopt;
  }
  return std::nullopt;
}

Matrix centralizer_embedding(const SliceSpec& spec, const std::vector<Matrix>& alpha) {
  spec.validate();
  if (spec.k_equals_n()) {
    if (alpha.size() != 1 || alpha[0].rows() != 2 || alpha[0].cols() != 2)
      throw std::invalid_argument("centralizer_embedding: expected one 2x2 block");
    return kron(Matrix::identity(static_cast<size_t>(spec.n)), alpha[0]);
  }
  if (alpha.size() != 2 || alpha[0].rows() != 1 || alpha[1].rows() != 1)
    throw std::invalid_argument("centralizer_embedding: expected two 1x1 blocks");
  return block_diag({Matrix::scalar(static_cast<size_t>(spec.k), alpha[0](0, 0)),
                     Matrix::scalar(static_cast<size_t>(2 * spec.n - spec.k), alpha[1](0, 0))});
}

NonemptyReport nonempty_typeA(int n, int k, const std::vector<size_t>& v) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("nonempty: need 1 <= k <= n");
  const size_t len = 2 * static_cast<size_t>(n) - 1;
  if (v.size() != len) throw std::invalid_argument("nonempty: v must have length 2n-1");
  for (size_t i = 0; i < len; ++i)
    if (v[i] != v[len - 1 - i]) throw std::invalid_argument("nonempty: v is not symmetric");
  NonemptyReport r;
  auto vi = [&](int i) { return static_cast<int>(v[static_cast<size_t>(i - 1)]); };
  for (int i = 1; i <= n; ++i) {
    int s;
    if (i == 1)
      s = 1 - vi(1);
    else if (i <= k)
      s = 1 - vi(i) + vi(i - 1);
    else
      s = -vi(i) + vi(i - 1);
    r.s.push_back(s);
    if (s != 0) ++r.ell;
  }
  r.nonempty = r.ell <= k;
  for (int s : r.s) r.nonempty = r.nonempty && s >= -1 && s <= 1;
  return r;
}

}  // namespace qf
