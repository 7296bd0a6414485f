#include "quiverfold/fixtures.hpp"

#include <stdexcept>

namespace qf {

Quiver type_a(int m, int sink) {
  std::vector<std::string> v;
  for (int i = 1; i <= m; ++i) v.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 1; i < m; ++i) {
    const auto a = std::to_string(i), b = std::to_string(i + 1);
    e.emplace_back(i < sink ? std::make_pair(a, b) : std::make_pair(b, a));
  }
  return Quiver::from_edges(v, e);
}

QuiverWithAut a_involution(int n) {
  if (n < 1) throw std::invalid_argument("a_involution: n must be positive");
  Quiver q = type_a(2 * n - 1, n);
  std::map<std::string, std::string> p;
  for (int i = 1; i <= 2 * n - 1; ++i) p[std::to_string(i)] = std::to_string(2 * n - i);
  AdmAut a = make_aut_from_vertices(q, p, 2);
  return {"A" + std::to_string(2 * n - 1) + " involution", std::move(q), std::move(a)};
}

QuiverWithAut d_involution(int n) {
  const auto a = a_involution(n);
  SplitQuotient s = split_quotient(a.quiver, a.aut);
  return {"D" + std::to_string(n + 1) + " involution", std::move(s.split), std::move(s.aut)};
}

QuiverWithAut d4_triality() {
  Quiver q = Quiver::from_edges({"0", "1", "2", "3"}, {{"1", "0"}, {"2", "0"}, {"3", "0"}});
  AdmAut a = make_aut_from_vertices(q, {{"1", "2"}, {"2", "3"}, {"3", "1"}}, 3);
  return {"D4 triality", std::move(q), std::move(a)};
}

QuiverWithAut e6_involution() {
  Quiver q = Quiver::from_edges({"1", "2", "3", "4", "5", "6"},
                                {{"1", "2"}, {"2", "3"}, {"5", "4"}, {"4", "3"}, {"6", "3"}});
  AdmAut a = make_aut_from_vertices(q, {{"1", "5"}, {"5", "1"}, {"2", "4"}, {"4", "2"}}, 2);
  return {"E6 involution", std::move(q), std::move(a)};
}

QuiverWithAut affine_a3_rotation() {
  Quiver q = Quiver::from_edges({"0", "1", "2", "3"}, {{"1", "2"}, {"3", "2"}, {"1", "0"}, {"3", "0"}});
  AdmAut a = make_aut_from_vertices(q, {{"0", "2"}, {"1", "3"}, {"2", "0"}, {"3", "1"}}, 2);
  return {"affine A3 rotation", std::move(q), std::move(a)};
}

QuiverWithAut affine_a5_involution() {
  Quiver q = Quiver::from_edges({"0", "1", "2", "3", "4", "5"},
                                {{"0", "1"}, {"0", "5"}, {"1", "2"}, {"5", "4"}, {"2", "3"}, {"4", "3"}});
  AdmAut a = make_aut_from_vertices(q, {{"1", "5"}, {"5", "1"}, {"2", "4"}, {"4", "2"}}, 2);
  return {"affine A5 involution", std::move(q), std::move(a)};
}

QuiverWithAut identity_copies(const Quiver& q, int period, std::string name) {
  return {std::move(name), q, identity_aut(q, period)};
}

std::vector<QuiverWithAut> standard_fixtures() {
  std::vector<QuiverWithAut> out;
  for (int n = 2; n <= 6; ++n) out.push_back(a_involution(n));
  for (int n = 2; n <= 6; ++n) out.push_back(d_involution(n));
  out.push_back(d4_triality());
  out.push_back(e6_involution());
  out.push_back(affine_a3_rotation());
  out.push_back(affine_a5_involution());
  out.push_back(identity_copies(type_a(2, 2), 3, "A2 identity, period 3"));
  out.push_back(identity_copies(type_a(3, 2), 3, "A3 identity, period 3"));
  return out;
}

}  // namespace qf
