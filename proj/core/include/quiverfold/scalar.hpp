#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace qf {

using Rational = mpq_class;

// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<Rational>& cyclotomic_polynomial(int n);

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// Rationals are stored on a fast path (order 1). Anything else is kept in the
/// power basis 1, z, ..., z^(deg-1) of Q[z]/(Phi_N). Orders 1 and 2 describe
/// the same field and both normalize to order 1. Binary operations between
/// different orders embed both operands into Q(zeta_lcm).
class Scalar {
 public:
  Scalar() : q_(0) {}
  Scalar(long v) : q_(v) {}  // NOLINT: implicit by intent, integer literals are scalars
  Scalar(int v) : q_(v) {}   // NOLINT
  Scalar(const Rational& q) : q_(q) {}  // NOLINT

  static Scalar from_coeffs(int order, std::vector<Rational> coeffs);
  // zeta_order^power.
  static Scalar root_of_unity(int order, long power = 1);
  static Scalar parse(const std::string& text);

  int order() const { return order_; }
  bool is_rational() const { return order_ == 1; }
  const Rational& rational() const;
  // Power-basis coefficients in Q(zeta_order); order must be a multiple of order().
  std::vector<Rational> coeffs(int order) const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(long e) const;

  // "p/q" for rationals, "[c0, c1, ...]@N" otherwise.
  std::string to_string() const;

 private:
  void normalize();
  void lift_to(int order);

  int order_ = 1;
  Rational q_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace qf
