#pragma once

#include <string>
#include <vector>

#include "quiverfold/matrix.hpp"

namespace qf {

class Partition {
 public:
  Partition() = default;
  // Drops zero parts; throws if the remaining parts are not weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // sum of parts
  size_t length() const { return parts_.size(); }
  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  std::vector<int> parts_;
};

// Dominance order: every partial sum of lambda is at most that of mu.
bool dominance_leq(const Partition& lambda, const Partition& mu);

// Jordan type of a nilpotent matrix from the ranks of its powers.
// Throws std::domain_error if X is not nilpotent.
Partition jordan_type_nilpotent(const Matrix& x);

bool is_nilpotent(const Matrix& x);

}  // namespace qf
