#include <benchmark/benchmark.h>

#include <memory>

#include "quiverfold/fixtures.hpp"
#include "quiverfold/foldfix.hpp"
#include "quiverfold/maffei.hpp"
#include "suites.hpp"

using namespace qf;

namespace {

SliceSpec spec_for(int n, int k) { return make_slice_spec(n, k, k == n ? 1 : 0, k == n ? 1 : 0); }

void BM_Recursion(benchmark::State& state) {
  const auto spec = spec_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  Rng rng(1);
  const auto p = random_params(spec, rng);
  for (auto _ : state) benchmark::DoNotOptimize(run_recursion(p));
}
BENCHMARK(BM_Recursion)->Args({2, 2})->Args({3, 3})->Args({4, 4})->Args({3, 1})->Args({4, 2})->Args({5, 3});

void BM_Phi1(benchmark::State& state) {
  const qf::cli::SliceCase c{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1, 1};
  const auto v = qf::cli::sampling_dims(c).back();
  std::optional<AdhmDatum> x;
  for (std::uint64_t s = 1; !x && s < 50; ++s) x = qf::cli::sample_slice_point(c, v, s);
  if (!x) {
    state.SkipWithError("no stable sample");
    return;
  }
  const auto spec = c.spec();
  for (auto _ : state) benchmark::DoNotOptimize(phi1(spec, *x));
}
BENCHMARK(BM_Phi1)->Args({2, 2})->Args({3, 3})->Args({2, 1})->Args({3, 2});

void BM_SamplePoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto q = std::make_shared<const Quiver>(a_involution(n).quiver);
  const auto v = qf::cli::staircase_v(n, n);
  const auto w = small_w(make_slice_spec(n, n));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sample_point(q, v, w, seed++));
}
BENCHMARK(BM_SamplePoint)->Arg(2)->Arg(3)->Arg(4);

void BM_ClassifyFixed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto spec = spec_for(n, n);
  const auto ctx = fold_context_for(spec, qf::cli::staircase_v(n, n));
  const auto ds = enumerate_decompositions(ctx);
  std::optional<AdhmDatum> x;
  for (const auto& d : ds) {
    if (auto r = sample_split_point(ctx, d, 1); r.datum) {
      x = psi_embed(ctx, d, *r.datum);
      break;
    }
  }
  if (!x) {
    state.SkipWithError("no stable sample");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(classify_fixed(ctx, *x));
}
BENCHMARK(BM_ClassifyFixed)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
