#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quiverfold/fixtures.hpp"
#include "quiverfold/linalg.hpp"
#include "quiverfold/maffei.hpp"
#include "suites.hpp"

using namespace qf;
using qf::cli::SliceCase;

namespace {

MaffeiParams scalar_k_equals_n(int n, const std::vector<Scalar>& r) {
  MaffeiParams p;
  p.regime = Regime::KEqualsN;
  p.n = n;
  p.k = n;
  p.r = 1;
  for (const auto& s : r) p.r11.push_back(Matrix::scalar(1, s));
  return p;
}

AdhmDatum sample(const SliceCase& c, size_t dims_index, std::uint64_t seed) {
  const auto dims = qf::cli::sampling_dims(c);
  for (std::uint64_t s = seed; s < seed + 20; ++s)
    if (auto x = qf::cli::sample_slice_point(c, dims.at(dims_index), s)) return *x;
  throw std::runtime_error("no stable sample for " + c.label());
}

const std::vector<SliceCase> kCases{{2, 2, 2, 0}, {2, 2, 1, 1}, {3, 3, 1, 1}, {2, 1, 0, 0}, {3, 1, 0, 0}, {3, 2, 0, 0}};

}  // namespace

TEST(Recursion, FirstStepClosedForm) {
  const auto st = run_recursion(scalar_k_equals_n(1, {Scalar(6)}));
  EXPECT_EQ(st.step(1).M, Matrix::of({{3, 1}}));
  EXPECT_EQ(st.step(1).N, Matrix::of({{1}, {3}}));
}

TEST(Recursion, SecondStepWorkedExample) {
  const auto st = run_recursion(scalar_k_equals_n(2, {Scalar(6), Scalar(2)}));
  EXPECT_EQ(st.step(2).M, Matrix::of({{2, 1, 0}, {5, 1, 1}}));
  EXPECT_EQ(st.step(2).N, Matrix::of({{1, 0}, {1, 1}, {5, 2}}));
  EXPECT_EQ(*st.alpha(2, 1, 1, 2, 1), Matrix::scalar(1, 5));
  EXPECT_EQ(*st.beta(2, 1, 1, 2, 2), Matrix::scalar(1, 2));
  EXPECT_FALSE(st.alpha(2, 1, 1, 1, 2).has_value());
}

TEST(Recursion, ClosedFormsOverMatrices) {
  Rng rng(3);
  for (int t = 0; t < 5; ++t) {
    MaffeiParams p = zero_params(make_slice_spec(2, 2));
    p.r11 = {rng.matrix(2, 2), rng.matrix(2, 2)};
    const auto st = run_recursion(p);
    const auto cf = qf::testing::closed_forms(p.r11[0], p.r11[1]);
    EXPECT_EQ(st.step(1).M, cf.M1);
    EXPECT_EQ(st.step(1).N, cf.N1);
    EXPECT_EQ(st.step(2).M, cf.M2);
    EXPECT_EQ(st.step(2).N, cf.N2);
  }
}

TEST(Recursion, ZeroParametersGiveTheBasePoint) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto spec = make_slice_spec(n, k);
      EXPECT_EQ(run_recursion(zero_params(spec)).product(), build_triple(spec).E) << n << "," << k;
    }
}

TEST(Recursion, ShuffledAssemblyGivesTheSameSolution) {
  Rng rng(17);
  for (const auto& c : kCases) {
    const auto p = random_params(c.spec(), rng);
    const auto base = run_recursion(p);
    for (std::uint64_t s = 1; s <= 3; ++s) {
      const auto other = run_recursion(p, {s});
      for (int j = 1; j <= p.steps(); ++j) {
        EXPECT_EQ(other.step(j).M, base.step(j).M) << c.label();
        EXPECT_EQ(other.step(j).N, base.step(j).N) << c.label();
      }
    }
  }
}

// Arbitrary parameters need not come from a point, so only the affine
// slice condition holds, not nilpotency.
TEST(Recursion, OutputLiesInTheAffineSlice) {
  Rng rng(5);
  for (const auto& c : kCases) {
    const auto t = build_triple(c.spec());
    const auto x = run_recursion(random_params(c.spec(), rng)).product();
    EXPECT_TRUE(commutator(x - t.E, t.F).is_zero()) << c.label();
  }
}

TEST(Recursion, RejectsMalformedParams) {
  MaffeiParams p = zero_params(make_slice_spec(3, 1));
  p.r00.pop_back();
  EXPECT_ANY_THROW(run_recursion(p));
}

TEST(ExtractParams, KEqualsNMatchesArrowProducts) {
  const SliceCase c{2, 2, 2, 0};
  const auto x = sample(c, 3, 1);
  const auto p = extract_params(c.spec(), x);
  using qf::testing::loop;
  EXPECT_EQ(p.r11[0], x.Delta[1] * x.Gamma[1]);
  EXPECT_EQ(p.r11[1], loop(x, 2, 1, 2));
  EXPECT_EQ(p.r11[1], x.Delta[1] * qf::testing::arrow(x, 1, 2) * qf::testing::arrow(x, 2, 1) * x.Gamma[1]);
}

TEST(ExtractParams, KLessThanNSigns) {
  using qf::testing::loop;
  const SliceCase c{3, 1, 0, 0};
  const auto x = sample(c, 3, 1);
  const auto p = extract_params(c.spec(), x);
  // n = 3, k = 1: the far vertex is 5 and n - k = 2.
  EXPECT_EQ(p.r00[0], loop(x, 1, 1, 1));
  EXPECT_EQ(p.r01[0], loop(x, 1, 1, 5));
  EXPECT_EQ(p.r10[0], loop(x, 5, 1, 1));
  EXPECT_EQ(p.r11[0], loop(x, 5, 5, 5));
  EXPECT_EQ(p.r11[1], -loop(x, 5, 4, 5));
  EXPECT_EQ(p.r11[2], loop(x, 5, 3, 5));
  EXPECT_EQ(p.r11[3], loop(x, 5, 2, 5));
  EXPECT_EQ(p.r11[4], loop(x, 5, 1, 5));

  const SliceCase c2{2, 1, 0, 0};
  const auto y = sample(c2, 2, 1);
  const auto p2 = extract_params(c2.spec(), y);
  EXPECT_EQ(p2.r01[0], -loop(y, 1, 1, 3));
  EXPECT_EQ(p2.r11[2], -loop(y, 3, 1, 3));
}

TEST(ExtractParams, ZeroDatum) {
  const auto spec = make_slice_spec(2, 2);
  const auto q = std::make_shared<const Quiver>(a_involution(2).quiver);
  const auto x = AdhmDatum::zero(q, {1, 2, 1}, small_w(spec));
  EXPECT_EQ(extract_params(spec, x), zero_params(spec));
  EXPECT_EQ(phi1_unchecked(spec, x), build_triple(spec).E);
  EXPECT_THROW(phi1(spec, x), std::invalid_argument);
}

TEST(Phi1, InvariantUnderGv) {
  Rng rng(9);
  for (const auto& c : kCases) {
    const auto x = sample(c, 0, 2);
    const auto spec = c.spec();
    const auto X = phi1(spec, x);
    for (int t = 0; t < 3; ++t)
      EXPECT_EQ(phi1(spec, act(GroupElement::random(GroupKind::V, x.v, rng), x)), X) << c.label();
  }
}

TEST(Phi1, JordanTypeBoundedByEll) {
  for (const auto& c : kCases) {
    for (const auto& v : qf::cli::sampling_dims(c)) {
      const auto x = qf::cli::sample_slice_point(c, v, 4);
      if (!x) continue;
      const auto X = phi1(c.spec(), *x);
      const int ell = nonempty_typeA(c.n, c.k, v).ell;
      EXPECT_TRUE(in_orbit_closure(X, Partition({2 * c.n - ell, ell}))) << c.label();
    }
  }
}

TEST(Series, ZeroAndSampledData) {
  const auto q = std::make_shared<const Quiver>(a_involution(2).quiver);
  EXPECT_TRUE(check_series_inverse(AdhmDatum::zero(q, {1, 2, 1}, {0, 2, 0})));
  for (const auto& c : kCases) EXPECT_TRUE(check_series_inverse(sample(c, 1, 3))) << c.label();
}

TEST(Series, PerturbedDeltaFails) {
  auto x = sample(SliceCase{2, 2, 2, 0}, 3, 1);
  x.Delta[1](0, 0) += 1;
  EXPECT_FALSE(check_series_inverse(x));
}

TEST(Covariance, Laws) {
  Rng rng(21);
  for (const auto& c : kCases) {
    const auto p = random_params(c.spec(), rng);
    EXPECT_TRUE(check_covariance(p, Scalar(1), 1, AntiAuto::Identity));
    EXPECT_TRUE(check_covariance(p, Scalar(-1), 1, AntiAuto::Identity)) << c.label();
    EXPECT_TRUE(check_covariance(p, Scalar::root_of_unity(4), -1, AntiAuto::Transpose)) << c.label();
  }
}

TEST(Padding, ParametersShiftAndPhi1Embeds) {
  for (const auto& c : kCases) {
    const auto x = sample(c, 0, 6);
    const auto spec = c.spec();
    const auto big = pad_with_zeros(x);
    EXPECT_EQ(big.v.front(), 0u);
    EXPECT_EQ(big.v.back(), 0u);
    EXPECT_TRUE(params_agree_under_padding(extract_params(spec, x), extract_params(padded_spec(spec), big)));
  }
}
