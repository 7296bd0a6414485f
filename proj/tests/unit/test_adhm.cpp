#include <gtest/gtest.h>

#include <memory>

#include "quiverfold/adhm.hpp"
#include "quiverfold/fixtures.hpp"
#include "quiverfold/linalg.hpp"

using namespace qf;

namespace {

QuiverPtr a3() { return std::make_shared<const Quiver>(a_involution(2).quiver); }

AdhmDatum stable_a3(std::uint64_t seed, bool delta_zero = false) {
  SampleOptions o;
  o.delta_zero = delta_zero;
  auto r = sample_point(a3(), {1, 2, 1}, {0, 2, 0}, seed, o);
  if (!r.datum) throw std::runtime_error("sampler gave up: " + r.diagnostic);
  return *r.datum;
}

}  // namespace

TEST(Adhm, ZeroDatumIsInLambdaButNotStable) {
  const auto x = AdhmDatum::zero(a3(), {1, 2, 1}, {0, 2, 0});
  EXPECT_TRUE(in_lambda(x));
  EXPECT_FALSE(is_stable(x));
  EXPECT_TRUE(is_b_nilpotent(x));
  EXPECT_TRUE(AdhmDatum::zero(a3(), {0, 0, 0}, {0, 2, 0}).total_v() == 0);
  EXPECT_TRUE(is_stable(AdhmDatum::zero(a3(), {0, 0, 0}, {0, 2, 0})));
}

TEST(Adhm, ShapeCheckRejectsWrongMaps) {
  auto x = AdhmDatum::zero(a3(), {1, 2, 1}, {0, 2, 0});
  x.B[0] = Matrix(3, 3);
  EXPECT_THROW(x.check_shapes(), std::invalid_argument);
}

TEST(Adhm, SampledPointsSatisfyTheRelations) {
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const auto x = stable_a3(s);
    for (const auto& m : moment_residual(x)) EXPECT_TRUE(m.is_zero());
    EXPECT_TRUE(is_stable(x));
  }
}

TEST(Adhm, SamplerIsDeterministic) {
  EXPECT_EQ(stable_a3(7), stable_a3(7));
}

TEST(Adhm, DeltaZeroSamplesAreLagrangian) {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const auto x = stable_a3(s, true);
    for (const auto& d : x.Delta) EXPECT_TRUE(d.is_zero());
    EXPECT_TRUE(in_lagrangian(x, true));
  }
}

TEST(Adhm, ImpossibleDimensionsFailCleanly) {
  // v_2 = 3 > w_2 + v_1 + v_3 leaves no stable point.
  const auto r = sample_point(a3(), {0, 3, 0}, {0, 2, 0}, 1);
  EXPECT_FALSE(r.datum.has_value());
  EXPECT_FALSE(r.diagnostic.empty());
}

TEST(Adhm, ActionIsAGroupAction) {
  Rng rng(11);
  const auto x = stable_a3(3);
  const auto g = GroupElement::random(GroupKind::V, x.v, rng);
  const auto h = GroupElement::random(GroupKind::V, x.v, rng);
  EXPECT_EQ(act(g * h, x), act(g, act(h, x)));
  EXPECT_EQ(act(GroupElement::identity(GroupKind::V, x.v), x), x);
  EXPECT_TRUE((g * g.inverse()).is_identity());
  const auto y = act(g, x);
  for (const auto& m : moment_residual(y)) EXPECT_TRUE(m.is_zero());
  EXPECT_TRUE(is_stable(y));
}

TEST(Adhm, GwActionPreservesLambda) {
  Rng rng(5);
  const auto x = stable_a3(4);
  const auto a = GroupElement::random(GroupKind::W, x.w, rng);
  EXPECT_TRUE(in_lambda(act(a, x)));
}

TEST(Adhm, TransporterRecoversTheGroupElement) {
  Rng rng(2);
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const auto x = stable_a3(s);
    const auto g = GroupElement::random(GroupKind::V, x.v, rng);
    const auto t = transporter(x, act(g, x));
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(*t, g);
  }
  EXPECT_FALSE(transporter(stable_a3(1), stable_a3(2)).has_value());
}

TEST(Adhm, PathProductComposesArrows) {
  const auto x = stable_a3(9);
  const auto& q = *x.quiver;
  const Matrix b12 = x.B[q.arrow_index("1->2")];
  const Matrix b21 = x.B[q.arrow_index("2->1")];
  EXPECT_EQ(path_product(x, std::vector<std::string>{"2", "1"}), b12);
  EXPECT_EQ(path_product(x, std::vector<std::string>{"2", "1", "2"}), b12 * b21);
  EXPECT_EQ(path_product(x, std::vector<std::string>{"2"}), Matrix::identity(2));
  const Matrix b32 = x.B[q.arrow_index("2->3")];
  EXPECT_EQ(path_product(x, std::vector<std::string>{"3", "1"}), b32 * b12);
}

TEST(Adhm, TangentDimensionAtStablePoint) {
  // Trivial stabilizer at a stable point makes d(mu) surjective.
  const auto x = stable_a3(1);
  size_t dim_m = 0;
  const auto& q = *x.quiver;
  for (const auto& a : q.arrows()) dim_m += x.v[a.src] * x.v[a.tgt];
  for (size_t i = 0; i < x.v.size(); ++i) dim_m += 2 * x.v[i] * x.w[i];
  EXPECT_EQ(dim_gv(x.v), 6u);
  EXPECT_EQ(tangent_dimension(x), dim_m - dim_gv(x.v));
}

TEST(Adhm, AffineQuiverIsNotForcedNilpotent) {
  const auto f = affine_a3_rotation();
  const auto q = std::make_shared<const Quiver>(f.quiver);
  const auto r = sample_point(q, {1, 1, 1, 1}, {1, 0, 1, 0}, 3);
  ASSERT_TRUE(r.datum.has_value()) << r.diagnostic;
  EXPECT_TRUE(in_lambda(*r.datum));
}
