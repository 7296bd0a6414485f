#include "quiverfold/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "quiverfold/linalg.hpp"

namespace qf {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("Partition: negative part");
    if (p > 0) parts_.push_back(p);
  }
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
    throw std::invalid_argument("Partition: parts must be weakly decreasing");
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : static_cast<size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str() + ")";
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominance_leq: partitions of different integers");
  int a = 0, b = 0;
  const auto& l = lambda.parts();
  const auto& m = mu.parts();
  for (size_t i = 0; i < std::max(l.size(), m.size()); ++i) {
    a += i < l.size() ? l[i] : 0;
    b += i < m.size() ? m[i] : 0;
    if (a > b) return false;
  }
  return true;
}

bool is_nilpotent(const Matrix& x) {
  if (!x.is_square()) throw std::invalid_argument("is_nilpotent: matrix is not square");
  return x.pow(static_cast<unsigned>(x.rows())).is_zero();
}

Partition jordan_type_nilpotent(const Matrix& x) {
  if (!is_nilpotent(x)) throw std::domain_error("jordan_type_nilpotent: matrix is not nilpotent");
  const size_t n = x.rows();
  // conj[j-1] = rank(X^{j-1}) - rank(X^j) is the number of blocks of size >= j.
  std::vector<int> conj;
  size_t prev = n;
  Matrix p = Matrix::identity(n);
  while (prev > 0) {
    p = p * x;
    const size_t r = rank(p);
    conj.push_back(static_cast<int>(prev - r));
    prev = r;
  }
  return Partition(std::move(conj)).conjugate();
}

}  // namespace qf
