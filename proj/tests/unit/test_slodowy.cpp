#include <gtest/gtest.h>

#include "quiverfold/linalg.hpp"
#include "quiverfold/slodowy.hpp"

using namespace qf;

TEST(Sl2, BlockRelations) {
  for (size_t m = 1; m <= 6; ++m) {
    const auto t = sl2_block(m);
    EXPECT_EQ(commutator(t.H, t.E), t.E * Scalar(2));
    EXPECT_EQ(commutator(t.H, t.F), t.F * Scalar(-2));
    EXPECT_EQ(commutator(t.E, t.F), t.H);
  }
}

TEST(Sl2, TripleForBothRegimes) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto t = build_triple(make_slice_spec(n, k));
      EXPECT_EQ(commutator(t.E, t.F), t.H);
      const Partition expect = k == n ? Partition({n, n}) : Partition({2 * n - k, k});
      EXPECT_EQ(jordan_type_nilpotent(t.E), expect) << n << "," << k;
    }
}

TEST(Slice, BasePointIsInTheSlice) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto spec = make_slice_spec(n, k);
      EXPECT_TRUE(in_slice(spec, build_triple(spec).E));
    }
}

TEST(Slice, RejectsNonSliceMatrices) {
  const auto spec = make_slice_spec(2, 1);
  const auto t = build_triple(spec);
  EXPECT_FALSE(in_slice(spec, t.F));
  EXPECT_THROW(in_slice(spec, Matrix::identity(4)), std::invalid_argument);
  EXPECT_THROW(in_slice(spec, Matrix(3, 3)), std::invalid_argument);
}

TEST(Slice, SpecValidation) {
  EXPECT_THROW(make_slice_spec(2, 3), std::invalid_argument);
  EXPECT_THROW(make_slice_spec(2, 2, 1, 0), std::invalid_argument);
  EXPECT_NO_THROW(make_slice_spec(3, 3, 1, 1));
}

TEST(OrbitClosure, UsesDominance) {
  const auto e = build_triple(make_slice_spec(2, 1)).E;  // type (3,1)
  EXPECT_TRUE(in_orbit_closure(e, Partition({3, 1})));
  EXPECT_TRUE(in_orbit_closure(e, Partition({4})));
  EXPECT_FALSE(in_orbit_closure(e, Partition({2, 2})));
}

TEST(Forms, TypeTableUpToFive) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      if (k < n) {
        const auto f = build_form(make_slice_spec(n, k));
        EXPECT_EQ(f.type, expected_form_type(n, k, 0, 0)) << n << "," << k;
        continue;
      }
      for (const auto& [p, m] : std::vector<std::pair<int, int>>{{2, 0}, {1, 1}, {0, 2}}) {
        const auto f = build_form(make_slice_spec(n, k, p, m));
        EXPECT_EQ(f.type, expected_form_type(n, k, p, m)) << n << "," << p << m;
      }
    }
}

TEST(Forms, KnownCases) {
  EXPECT_EQ(expected_form_type(2, 1, 0, 0), FormType::Symmetric);
  EXPECT_EQ(expected_form_type(3, 2, 0, 0), FormType::Skew);
  EXPECT_EQ(expected_form_type(2, 2, 1, 1), FormType::Skew);
  EXPECT_EQ(expected_form_type(2, 2, 2, 0), FormType::Symmetric);
  EXPECT_EQ(expected_form_type(3, 3, 1, 1), FormType::Symmetric);
  EXPECT_EQ(expected_form_type(3, 3, 2, 0), FormType::Skew);
}

TEST(Forms, ThetaPreservesTheTripleAndSlice) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto spec = make_slice_spec(n, k, k == n ? 1 : 0, k == n ? 1 : 0);
      const auto form = build_form(spec);
      const auto t = build_triple(spec);
      EXPECT_EQ(theta_big(form, t.E), t.E);
      EXPECT_EQ(theta_big(form, t.F), t.F);
      EXPECT_EQ(theta_big(form, t.H), t.H);
    }
}

TEST(Forms, Similitude) {
  const auto form = build_form(make_slice_spec(2, 1));
  EXPECT_EQ(form_similitude(form, Matrix::scalar(4, 3)), Scalar(9));
  EXPECT_FALSE(form_similitude(form, Matrix::diagonal({1, 2, 1, 1})));
}

TEST(Nonempty, Examples) {
  const auto r = nonempty_typeA(2, 2, {1, 2, 1});
  EXPECT_TRUE(r.nonempty);
  EXPECT_EQ(r.s, (std::vector<int>{0, 0}));
  EXPECT_EQ(r.ell, 0);
  EXPECT_TRUE(nonempty_typeA(2, 2, {0, 0, 0}).nonempty);
  EXPECT_FALSE(nonempty_typeA(2, 2, {0, 3, 0}).nonempty);
  EXPECT_EQ(nonempty_typeA(2, 1, {1, 1, 1}).ell, 0);
  EXPECT_THROW(nonempty_typeA(2, 2, {1, 2, 0}), std::invalid_argument);
  EXPECT_THROW(nonempty_typeA(2, 3, {1, 2, 1}), std::invalid_argument);
}

TEST(Centralizer, CommutesWithTheTriple) {
  const auto spec = make_slice_spec(3, 1);
  const auto z = centralizer_embedding(spec, {Matrix::scalar(1, 2), Matrix::scalar(1, 5)});
  const auto t = build_triple(spec);
  EXPECT_EQ(z * t.E, t.E * z);
  EXPECT_EQ(z * t.F, t.F * z);
  const auto s2 = make_slice_spec(2, 2);
  const auto z2 = centralizer_embedding(s2, {Matrix::of({{1, 2}, {3, 4}})});
  const auto t2 = build_triple(s2);
  EXPECT_EQ(z2 * t2.E, t2.E * z2);
}
