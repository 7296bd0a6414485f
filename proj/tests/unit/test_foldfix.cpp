#include <gtest/gtest.h>

#include <memory>

#include "quiverfold/fixtures.hpp"
#include "quiverfold/foldfix.hpp"

using namespace qf;

namespace {

std::optional<AdhmDatum> split_sample(const FoldContext& ctx, const Decomposition& d, std::uint64_t seed) {
  return sample_split_point(ctx, d, seed).datum;
}

}  // namespace

TEST(FoldContext, TypeAInvolutionDefaults) {
  const auto ctx = make_type_a_fold_context(2, {1, 2, 1}, {0, 2, 0}, 1);
  EXPECT_EQ(ctx.period(), 2);
  EXPECT_EQ(ctx.sq.split.num_vertices(), 3u);
  EXPECT_EQ(ctx.sigma[1], Matrix::diagonal({1, -1}));
  EXPECT_EQ(ctx.w_tilde(), (std::vector<size_t>{0, 1, 1}));
  EXPECT_EQ(ctx.zeta(1, 1), Scalar(-1));
}

TEST(FoldContext, RejectsIncompatibleSigma) {
  // sigma_n must square to the identity.
  EXPECT_THROW(make_type_a_fold_context(2, {1, 2, 1}, {0, 2, 0}, 1, Matrix::of({{0, 2}, {1, 0}})),
               std::invalid_argument);
  // v must be constant on orbits when phi defaults to identities.
  const auto f = a_involution(2);
  const auto q = std::make_shared<const Quiver>(f.quiver);
  EXPECT_THROW(make_fold_context(q, f.aut, {1, 2, 0}, {0, 1, 0}), std::invalid_argument);
}

TEST(Decompositions, EnumeratesRefinements) {
  const auto ctx = make_type_a_fold_context(2, {1, 2, 1}, {0, 2, 0}, 2);
  const auto ds = enumerate_decompositions(ctx);
  ASSERT_EQ(ds.size(), 3u);
  for (const auto& d : ds) {
    EXPECT_EQ(d.vt[0], 1u);
    EXPECT_EQ(d.vt[1] + d.vt[2], 2u);
  }
  const auto c3 = make_type_a_fold_context(3, {1, 2, 3, 2, 1}, {0, 0, 2, 0, 0}, 1);
  EXPECT_EQ(enumerate_decompositions(c3).size(), 4u);
}

TEST(Theta, IsAnInvolutionOnData) {
  const auto ctx = make_type_a_fold_context(2, {1, 2, 1}, {0, 2, 0}, 1);
  const auto q = ctx.quiver;
  const auto r = sample_point(q, ctx.v, ctx.w, 3);
  ASSERT_TRUE(r.datum);
  const auto& x = *r.datum;
  const auto tx = theta(ctx, x);
  EXPECT_TRUE(in_lambda(tx));
  EXPECT_EQ(is_stable(tx), is_stable(x));
  EXPECT_EQ(theta(ctx, tx), x);
  Rng rng(4);
  const auto g = GroupElement::random(GroupKind::V, ctx.v, rng);
  EXPECT_EQ(theta(ctx, act(g, x)), act(theta(ctx, g), tx));
}

TEST(Psi, FixedByTheTwistedTheta) {
  const auto ctx = make_type_a_fold_context(3, {1, 2, 2, 2, 1}, {0, 1, 1, 1, 0}, 1);
  size_t hits = 0;
  for (const auto& d : enumerate_decompositions(ctx)) {
    for (std::uint64_t s = 1; s <= 3; ++s) {
      const auto y = split_sample(ctx, d, s);
      if (!y) continue;
      ++hits;
      const auto x = psi_embed(ctx, d, *y);
      EXPECT_TRUE(in_lambda(x));
      EXPECT_TRUE(is_stable(x));
      EXPECT_EQ(act(g_tilde(ctx, d), theta(ctx, x)), x);
    }
  }
  EXPECT_GT(hits, 0u);
}

TEST(ClassifyFixed, RoundTripsThroughPsi) {
  const auto ctx = make_type_a_fold_context(2, {1, 2, 1}, {0, 2, 0}, 1);
  Rng rng(8);
  for (const auto& d : enumerate_decompositions(ctx)) {
    const auto y = split_sample(ctx, d, 5);
    if (!y) continue;
    const auto x = act(GroupElement::random(GroupKind::V, ctx.v, rng), psi_embed(ctx, d, *y));
    const auto fp = classify_fixed(ctx, x);
    ASSERT_TRUE(fp);
    EXPECT_EQ(fp->d, d);
    EXPECT_EQ(act(fp->h, x), fp->normalized);
    EXPECT_EQ(psi_embed(ctx, d, fp->preimage), fp->normalized);
    EXPECT_EQ(act(fp->g, theta(ctx, x)), x);
  }
}

TEST(ClassifyFixed, RejectsNonFixedOrbits) {
  const auto ctx = make_type_a_fold_context(2, {1, 1, 1}, {1, 1, 1}, 1);
  size_t sampled = 0, rejected = 0;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const auto r = sample_point(ctx.quiver, ctx.v, ctx.w, s);
    if (!r.datum) continue;
    ++sampled;
    if (!classify_fixed(ctx, *r.datum)) ++rejected;
  }
  EXPECT_GT(sampled, 0u);
  EXPECT_GT(rejected, 0u);
}

TEST(Similitudes, ComponentPermutationUnderMinusOne) {
  const auto ctx = make_type_a_fold_context(2, {1, 2, 1}, {0, 2, 0}, 1);
  const Decomposition d{{1, 2, 0}};
  EXPECT_EQ(component_permutation(ctx, Scalar(-1), d), (Decomposition{{1, 0, 2}}));
  EXPECT_EQ(component_permutation(ctx, Scalar(1), d), d);
}

TEST(Similitudes, DetectsThetaScaling) {
  const auto ctx = make_type_a_fold_context(2, {1, 2, 1}, {0, 2, 0}, 1);
  auto alpha = GroupElement::identity(GroupKind::W, ctx.w);
  alpha.blocks[1] = Matrix::of({{0, 1}, {1, 0}});
  const auto lambda = is_theta_similitude(ctx, alpha);
  ASSERT_TRUE(lambda);
  EXPECT_EQ(*lambda, Scalar(-1));
  alpha.blocks[1] = Matrix::of({{1, 1}, {0, 1}});
  EXPECT_FALSE(is_theta_similitude(ctx, alpha));
}

TEST(Psi, IdentityAutomorphismGivesCopies) {
  const auto f = identity_copies(type_a(2, 2), 2, "A2 copies");
  const auto q = std::make_shared<const Quiver>(f.quiver);
  Matrix minus = Matrix::scalar(1, -1);
  const auto ctx = make_fold_context(q, f.aut, {1, 1}, {1, 1}, std::nullopt,
                                     std::vector<Matrix>{Matrix::identity(1), minus});
  const auto ds = enumerate_decompositions(ctx);
  EXPECT_EQ(ds.size(), 4u);
  EXPECT_EQ(ctx.w_tilde(), (std::vector<size_t>{1, 0, 0, 1}));
}
