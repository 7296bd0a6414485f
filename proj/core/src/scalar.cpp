#include "quiverfold/scalar.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qf {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic polynomial m.
Poly poly_mod(Poly p, const Poly& m) {
  const size_t dm = m.size() - 1;
  trim(p);
  while (p.size() > dm) {
    const Rational lead = p.back();
    const size_t shift = p.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) p[shift + i] -= lead * m[i];
    trim(p);
  }
  p.resize(dm, Rational(0));
  return p;
}

// Exact quotient of p by the monic polynomial m.
Poly poly_div_exact(Poly p, const Poly& m) {
  const size_t dm = m.size() - 1;
  trim(p);
  if (p.size() < m.size()) throw std::logic_error("poly_div_exact: degree too small");
  Poly q(p.size() - dm, Rational(0));
  while (p.size() > dm) {
    const Rational lead = p.back();
    const size_t shift = p.size() - 1 - dm;
    q[shift] = lead;
    for (size_t i = 0; i <= dm; ++i) p[shift + i] -= lead * m[i];
    trim(p);
  }
  if (!p.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

Poly compute_cyclotomic(int n) {
  Poly p(static_cast<size_t>(n) + 1, Rational(0));
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
  }
  return p;
}

// Solves the square system a*x = b over Q; a must be invertible.
Poly solve_rational(std::vector<Poly> a, Poly b) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("Scalar: division by zero");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Rational inv = 1 / a[col][col];
    for (size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

int effective_order(int n) { return n <= 2 ? 1 : n; }

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  static std::mutex mu;
  static std::map<int, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Poly p = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

Scalar Scalar::from_coeffs(int order, std::vector<Rational> coeffs) {
  if (order < 1) throw std::invalid_argument("Scalar: field order must be positive");
  Scalar s;
  const int eff = effective_order(order);
  if (eff == 1) {
    // Q(zeta_2) = Q with zeta_2 = -1.
    Rational v = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) v += (order == 2 && i % 2 == 1) ? -coeffs[i] : coeffs[i];
    s.q_ = v;
    return s;
  }
  s.order_ = eff;
  s.c_ = poly_mod(std::move(coeffs), cyclotomic_polynomial(eff));
  s.normalize();
  return s;
}

Scalar Scalar::root_of_unity(int order, long power) {
  if (order < 1) throw std::invalid_argument("Scalar: field order must be positive");
  long p = power % order;
  if (p < 0) p += order;
  Poly x(static_cast<size_t>(p) + 1, Rational(0));
  x[static_cast<size_t>(p)] = 1;
  return from_coeffs(order, std::move(x));
}

const Rational& Scalar::rational() const {
  if (order_ != 1) throw std::domain_error("Scalar: value is not rational");
  return q_;
}

std::vector<Rational> Scalar::coeffs(int order) const {
  const int eff = effective_order(order);
  if (eff % order_ != 0) throw std::domain_error("Scalar: incompatible field order");
  Scalar t = *this;
  t.lift_to(eff);
  if (eff == 1) return {t.q_};
  return t.c_;
}

bool Scalar::is_zero() const { return order_ == 1 && q_ == 0; }
bool Scalar::is_one() const { return order_ == 1 && q_ == 1; }

void Scalar::normalize() {
  if (order_ == 1) return;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return;
  q_ = c_.empty() ? Rational(0) : c_[0];
  c_.clear();
  order_ = 1;
}

void Scalar::lift_to(int order) {
  if (order == order_) {
    if (order_ > 1 && c_.empty()) c_.assign(cyclotomic_polynomial(order).size() - 1, Rational(0));
    return;
  }
  if (order % order_ != 0) throw std::domain_error("Scalar: incompatible field order");
  const Poly& phi = cyclotomic_polynomial(order);
  if (order_ == 1) {
    c_.assign(phi.size() - 1, Rational(0));
    c_[0] = q_;
    q_ = 0;
    order_ = order;
    return;
  }
  const size_t step = static_cast<size_t>(order / order_);
  Poly p((c_.size() - 1) * step + 1, Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) p[k * step] = c_[k];
  c_ = poly_mod(std::move(p), phi);
  order_ = order;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (r.order_ == 1) {
    r.q_ = -r.q_;
  } else {
    for (auto& c : r.c_) c = -c;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (order_ == 1 && o.order_ == 1) {
    q_ += o.q_;
    return *this;
  }
  const int l = std::lcm(order_, o.order_);
  lift_to(l);
  Scalar b = o;
  b.lift_to(l);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (order_ == 1 && o.order_ == 1) {
    q_ *= o.q_;
    return *this;
  }
  if (o.order_ == 1) {
    for (auto& c : c_) c *= o.q_;
    normalize();
    return *this;
  }
  if (order_ == 1) {
    const Rational f = q_;
    *this = o;
    for (auto& c : c_) c *= f;
    normalize();
    return *this;
  }
  const int l = std::lcm(order_, o.order_);
  lift_to(l);
  Scalar b = o;
  b.lift_to(l);
  Poly p(c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) p[i + j] += c_[i] * b.c_[j];
  }
  c_ = poly_mod(std::move(p), cyclotomic_polynomial(l));
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.order_ == 1) {
    if (o.q_ == 0) throw std::domain_error("Scalar: division by zero");
    if (order_ == 1) {
      q_ /= o.q_;
    } else {
      for (auto& c : c_) c /= o.q_;
    }
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.order_ == 1 && b.order_ == 1) return a.q_ == b.q_;
  if (a.order_ == 1 || b.order_ == 1) return false;  // normalized: one is rational, the other is not
  const int l = std::lcm(a.order_, b.order_);
  return a.coeffs(l) == b.coeffs(l);
}

Scalar Scalar::inverse() const {
  if (order_ == 1) {
    if (q_ == 0) throw std::domain_error("Scalar: division by zero");
    Scalar r;
    r.q_ = 1 / q_;
    return r;
  }
  // Column j of the multiplication-by-this matrix is this * z^j.
  const size_t d = c_.size();
  std::vector<Poly> m(d, Poly(d, Rational(0)));
  Scalar basis = Scalar::root_of_unity(order_, 0);
  const Scalar z = Scalar::root_of_unity(order_, 1);
  for (size_t j = 0; j < d; ++j) {
    const std::vector<Rational> col = (*this * basis).coeffs(order_);
    for (size_t i = 0; i < d; ++i) m[i][j] = col[i];
    basis *= z;
  }
  Poly e(d, Rational(0));
  e[0] = 1;
  return from_coeffs(order_, solve_rational(std::move(m), std::move(e)));
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("invalid rational: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("invalid rational (zero denominator): '" + text + "'");
  q.canonicalize();
  return q;
}

std::string Scalar::to_string() const {
  if (order_ == 1) return rational_to_string(q_);
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << rational_to_string(c_[i]);
  os << "]@" << order_;
  return os.str();
}

Scalar Scalar::parse(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    const auto close = text.find(']');
    const auto at = text.find('@', close);
    if (close == std::string::npos || at == std::string::npos)
      throw std::invalid_argument("invalid scalar: '" + text + "'");
    const int order = std::stoi(text.substr(at + 1));
    std::vector<Rational> cs;
    std::stringstream body(text.substr(1, close - 1));
    std::string item;
    while (std::getline(body, item, ',')) cs.push_back(parse_rational(item));
    return from_coeffs(order, std::move(cs));
  }
  return Scalar(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace qf
