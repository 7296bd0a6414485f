#include <gtest/gtest.h>

#include <algorithm>

#include "quiverfold/fixtures.hpp"
#include "quiverfold/quiver.hpp"

using namespace qf;

namespace {

std::vector<std::vector<long>> transpose(const std::vector<std::vector<long>>& c) {
  std::vector<std::vector<long>> t(c.size(), std::vector<long>(c.size()));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c.size(); ++j) t[j][i] = c[i][j];
  return t;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST(Validate, AcceptsFixtures) {
  for (const auto& f : standard_fixtures()) EXPECT_TRUE(validate(f.quiver, f.aut).empty()) << f.name;
}

TEST(Validate, RejectsAdjacentOrbit) {
  const Quiver q = type_a(3, 2);
  // Swapping 1 and 2 is not even a quiver automorphism; the orbit check
  // must still name the adjacency.
  std::vector<size_t> vp{1, 0, 2};
  std::vector<size_t> ap(q.num_arrows());
  for (size_t h = 0; h < ap.size(); ++h) ap[h] = h;
  const auto problems = validate(q, make_aut(q, vp, ap, 2));
  EXPECT_TRUE(has(problems, "adjacent orbit"));
}

TEST(Validate, RejectsBadPeriod) {
  const auto f = a_involution(2);
  const auto problems = validate(f.quiver, make_aut(f.quiver, f.aut.vperm, f.aut.aperm, 3));
  EXPECT_FALSE(problems.empty());
}

TEST(SplitQuotient, TypeAFoldsToTypeD) {
  for (int n = 2; n <= 6; ++n) {
    const auto f = a_involution(n);
    const auto sq = split_quotient(f.quiver, f.aut);
    EXPECT_EQ(sq.split.num_vertices(), static_cast<size_t>(n + 1));
    EXPECT_EQ(sq.split.num_arrows(), static_cast<size_t>(2 * n));
    EXPECT_TRUE(is_finite_dynkin(sq.split));
    // The middle vertex splits in two; both halves are leaves.
    const std::string mid = std::to_string(n);
    for (const auto* id : {"|0", "|1"}) {
      const size_t v = sq.split.vertex_index(mid + id);
      size_t deg = 0;
      for (const auto& a : sq.split.arrows()) deg += a.src == v;
      EXPECT_EQ(deg, 1u);
    }
  }
}

TEST(SplitQuotient, RotationOfAffineA3GivesAffineA1) {
  const auto f = affine_a3_rotation();
  const auto sq = split_quotient(f.quiver, f.aut);
  EXPECT_EQ(sq.split.num_vertices(), 2u);
  EXPECT_EQ(sq.split.num_arrows(), 4u);
  for (size_t i = 0; i < sq.split.num_vertices(); ++i) EXPECT_EQ(sq.aut.vperm[i], i);
  EXPECT_FALSE(is_finite_dynkin(sq.split));
}

TEST(SplitQuotient, IdentityGivesDisjointCopies) {
  const Quiver a2 = type_a(2, 2);
  const auto f = identity_copies(a2, 3, "copies");
  const auto sq = split_quotient(f.quiver, f.aut);
  EXPECT_EQ(sq.split.num_vertices(), 6u);
  EXPECT_EQ(sq.split.num_arrows(), 6u);
  // a-tilde permutes the three copies cyclically.
  for (size_t i = 0; i < 6; ++i) {
    EXPECT_NE(sq.aut.vperm[i], i);
    EXPECT_EQ(sq.aut.apply_vertex(i, 3), i);
  }
}

TEST(SplitQuotient, CountsMatch) {
  for (const auto& f : standard_fixtures()) {
    const auto sq = split_quotient(f.quiver, f.aut);
    size_t expected = 0;
    for (size_t r : sq.reps) expected += static_cast<size_t>(f.aut.e_vertex[r]);
    EXPECT_EQ(sq.split.num_vertices(), expected) << f.name;
    EXPECT_TRUE(validate(sq.split, sq.aut).empty()) << f.name;
  }
}

TEST(SplitQuotient, DoubleFoldRecoversTypeAD) {
  for (int n = 2; n <= 5; ++n) {
    const auto a = a_involution(n);
    const auto once = split_quotient(a.quiver, a.aut);
    const auto twice = split_quotient(once.split, once.aut);
    EXPECT_TRUE(isomorphic(twice.split, a.quiver)) << n;
    const auto d = d_involution(n);
    const auto back = split_quotient(twice.split, twice.aut);
    EXPECT_TRUE(isomorphic(back.split, d.quiver)) << n;
  }
}

TEST(Cartan, TypeBAndC) {
  const auto f = a_involution(2);
  EXPECT_EQ(cartan(f.quiver, f.aut), (std::vector<std::vector<long>>{{2, -1}, {-2, 2}}));
  const auto sq = split_quotient(f.quiver, f.aut);
  EXPECT_EQ(cartan(sq.split, sq.aut), (std::vector<std::vector<long>>{{2, -2}, {-1, 2}}));
}

TEST(Cartan, IdentityOnA2IsSymmetric) {
  const auto f = identity_copies(type_a(2, 2), 1, "A2");
  EXPECT_EQ(cartan(f.quiver, f.aut), (std::vector<std::vector<long>>{{2, -1}, {-1, 2}}));
}

TEST(Cartan, SplitQuotientTransposes) {
  for (const auto& f : standard_fixtures()) {
    const auto sq = split_quotient(f.quiver, f.aut);
    const auto c = cartan(f.quiver, f.aut);
    EXPECT_EQ(cartan(sq.split, sq.aut), transpose(c)) << f.name;
    for (size_t i = 0; i < c.size(); ++i) {
      EXPECT_EQ(c[i][i], 2);
      for (size_t j = 0; j < c.size(); ++j)
        if (i != j) EXPECT_LE(c[i][j], 0);
    }
  }
}

TEST(EdgeOrbits, TypeA3) {
  const auto f = a_involution(2);
  const auto reps = edge_orbit_reps(f.quiver, f.aut);
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_EQ(f.quiver.arrow(reps[0].arrow).id, "1->2");
  EXPECT_EQ(reps[0].f, 0);
}

TEST(EdgeOrbits, IdentityKeepsOmega) {
  const Quiver q = type_a(4, 2);
  const auto reps = edge_orbit_reps(q, identity_aut(q, 2));
  EXPECT_EQ(reps.size(), q.omega().size());
  for (const auto& r : reps) EXPECT_EQ(r.f, 0);
}

TEST(EdgeOrbits, RotationRepresentativesStartAtRepresentatives) {
  const auto f = affine_a3_rotation();
  const auto reps = edge_orbit_reps(f.quiver, f.aut);
  EXPECT_EQ(reps.size(), 2u);
  const auto vreps = orbit_representatives(f.quiver, f.aut);
  for (const auto& r : reps) {
    const size_t s = f.quiver.arrow(r.arrow).src;
    EXPECT_NE(std::find(vreps.begin(), vreps.end(), s), vreps.end());
    EXPECT_GE(r.f, 0);
    EXPECT_LT(r.f, 2);
  }
}

TEST(Quiver, RejectsDanglingIds) {
  EXPECT_THROW(Quiver({"a"}, {{"h", "a", "b", "hb"}}, {"h"}), std::invalid_argument);
  const Quiver loop({"a"}, {{"h", "a", "a", "h"}}, {"h"});
  EXPECT_FALSE(loop.violations().empty());
}
