// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All checks are exact; the only tolerances are the pinned
// trial counts and wall-time budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "quiverfold/fixtures.hpp"
#include "quiverfold/linalg.hpp"
#include "quiverfold/maffei.hpp"
#include "suites.hpp"

using namespace qf;
using qf::cli::SliceCase;
using qf::cli::SuiteOptions;
using qf::cli::VerifyReport;

namespace {

constexpr std::uint64_t kSeed = 20240611;

// Wall-time budgets in seconds.
constexpr double kClosedFormBudget = 1.0;
constexpr double kCartanBudget = 1.0;
constexpr double kPsiBudget = 60.0;
constexpr double kSeriesParamsBudget = 60.0;
constexpr double kCovarianceBudget = 10.0;
constexpr double kInvolutionsBudget = 120.0;

// Trial counts.
constexpr size_t kClosedFormPairs = 20;
constexpr size_t kPsiTrialsPerRank = 40;        // 3 ranks, at least 100 completed
constexpr size_t kMinPsi = 100;
constexpr size_t kLagrangianTrialsPerRank = 12;  // at least 30 completed
constexpr size_t kMinLagrangian = 30;
constexpr size_t kSeriesTrialsPerCase = 50;
constexpr size_t kCovarianceParamsPerCase = 10;
constexpr size_t kSliceTrialsPerCase = 20;
constexpr size_t kInvolutionTrialsPerCase = 50;
constexpr size_t kClassifyTrialsPerCase = 40;   // 6 cases, at least 200 completed
constexpr size_t kMinClassify = 200;
constexpr size_t kPaddingSamplesPerCase = 6;
constexpr size_t kMinPadding = 30;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string summary(const VerifyReport& r) {
  std::string s = r.suite + " " + std::to_string(r.completed) + "/" + std::to_string(r.requested) + " completed, " +
                  std::to_string(r.failures.size()) + " failures";
  if (!r.failures.empty()) s += " (first: " + r.failures.front().label + ": " + r.failures.front().message + ")";
  if (r.insufficient()) s += ", insufficient samples";
  return s;
}

// Skipped trials never count; the report must be clean and reach both the
// suite quota and `min_completed`.
Outcome from_report(const VerifyReport& r, size_t min_completed) {
  Outcome o;
  o.pass = r.passed() && r.completed >= min_completed;
  o.detail = summary(r);
  if (r.completed < min_completed) o.detail += ", need " + std::to_string(min_completed);
  return o;
}

Outcome merge(Outcome a, const Outcome& b) {
  a.pass = a.pass && b.pass;
  a.detail += "; " + b.detail;
  return a;
}

SuiteOptions options(size_t trials, std::vector<SliceCase> cases = {}) {
  SuiteOptions o;
  o.trials = trials;
  o.seed = kSeed;
  o.cases = std::move(cases);
  return o;
}

Scalar random_rational(Rng& rng) {
  return rng.small_scalar() / rng.nonzero_scalar() + rng.small_scalar() / Scalar(7);
}

// 1. M1, N1, M2, N2 against the hand-solved closed forms.
Outcome closed_forms() {
  Rng rng(kSeed);
  size_t checked = 0, bad = 0;
  for (size_t t = 0; t < kClosedFormPairs; ++t) {
    for (size_t r : {1u, 2u}) {
      MaffeiParams p = zero_params(make_slice_spec(2, 2));
      p.r = r;
      Matrix r1(r, r), r2(r, r);
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
          r1(i, j) = random_rational(rng);
          r2(i, j) = random_rational(rng);
        }
      p.r11 = {r1, r2};
      const auto st = run_recursion(p);
      const auto cf = qf::testing::closed_forms(r1, r2);
      ++checked;
      if (st.step(1).M != cf.M1 || st.step(1).N != cf.N1 || st.step(2).M != cf.M2 || st.step(2).N != cf.N2) ++bad;
    }
  }
  // The worked example: r1 = 6, r2 = 2 over the rationals.
  MaffeiParams p = zero_params(make_slice_spec(2, 2));
  p.r = 1;
  p.r11 = {Matrix::scalar(1, 6), Matrix::scalar(1, 2)};
  const auto st = run_recursion(p);
  ++checked;
  if (st.step(2).M != Matrix::of({{2, 1, 0}, {5, 1, 1}}) || st.step(2).N != Matrix::of({{1, 0}, {1, 1}, {5, 2}}))
    ++bad;
  return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " parameter sets match"};
}

// 10. Padding plus the C/D table.
struct TableRow {
  int n, k, w_plus, w_minus;
  FormType type;  // C = skew, D = symmetric
  std::vector<size_t> d_tail;  // (v_+, v_-) of the matching D_{n+1} data
  std::vector<size_t> w_tail;  // (w_+, w_-)
};

std::vector<TableRow> cd_table(int max_n) {
  std::vector<TableRow> rows;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k) {
      if (k < n) {
        const auto h = static_cast<size_t>(k / 2);
        if (k % 2 == 0)
          rows.push_back({n, k, 0, 0, FormType::Skew, {h, h}, {0, 0}});
        else
          rows.push_back({n, k, 0, 0, FormType::Symmetric, {h, h + 1}, {0, 0}});
        continue;
      }
      const auto h = static_cast<size_t>(n / 2);
      if (n % 2 == 0) {
        rows.push_back({n, n, 1, 1, FormType::Skew, {h, h}, {1, 1}});
        rows.push_back({n, n, 0, 2, FormType::Symmetric, {h, h}, {0, 2}});
      } else {
        rows.push_back({n, n, 0, 2, FormType::Skew, {h, h + 1}, {0, 2}});
        rows.push_back({n, n, 1, 1, FormType::Symmetric, {h, h + 1}, {1, 1}});
      }
    }
  return rows;
}

Outcome table_check() {
  size_t rows = 0, bad = 0;
  std::string first;
  for (const auto& row : cd_table(5)) {
    ++rows;
    const auto spec = make_slice_spec(row.n, row.k, row.w_plus, row.w_minus);
    const auto e = build_triple(spec).E;
    bool ok = jordan_type_nilpotent(e) == Partition({2 * row.n - row.k, row.k});
    ok = ok && build_form(spec).type == row.type && expected_form_type(row.n, row.k, row.w_plus, row.w_minus) == row.type;
    ok = ok && theta_big(build_form(spec), e) == e;
    // The D_{n+1} data of the table is one of the components of D(v) for the
    // staircase v, with matching w.
    const auto v = qf::cli::staircase_v(row.n, row.k);
    const auto ctx = fold_context_for(spec, v);
    std::vector<size_t> want(v.begin(), v.begin() + (row.n - 1));
    want.insert(want.end(), row.d_tail.begin(), row.d_tail.end());
    bool found = false;
    for (const auto& d : enumerate_decompositions(ctx)) found = found || d.vt == want;
    ok = ok && found;
    if (row.k == row.n) {
      const auto wt = ctx.w_tilde();
      ok = ok && std::vector<size_t>(wt.end() - 2, wt.end()) == row.w_tail;
    }
    if (!ok) {
      ++bad;
      if (first.empty())
        first = " (first mismatch n=" + std::to_string(row.n) + ",k=" + std::to_string(row.k) + ")";
    }
  }
  return {bad == 0, "C/D table " + std::to_string(rows - bad) + "/" + std::to_string(rows) + " rows" + first};
}

Outcome padding_check() {
  const std::vector<SliceCase> cases{{2, 2, 1, 1}, {2, 2, 2, 0}, {3, 3, 1, 1}, {2, 1, 0, 0}, {3, 1, 0, 0}, {3, 2, 0, 0}};
  Rng rng(kSeed);
  size_t done = 0, bad = 0;
  for (const auto& c : cases) {
    const auto dims = qf::cli::sampling_dims(c);
    for (size_t t = 0; t < kPaddingSamplesPerCase; ++t) {
      const auto& v = dims[t % dims.size()];
      const auto x = qf::cli::sample_slice_point(c, v, qf::cli::trial_seed(kSeed, done + bad + 1000 * t));
      if (!x) continue;
      const auto spec = c.spec();
      const auto big = pad_with_zeros(*x);
      const auto pspec = padded_spec(spec);
      const bool ok = params_agree_under_padding(extract_params(spec, *x), extract_params(pspec, big)) &&
                      in_lambda(big) && is_stable(big);
      ok ? ++done : ++bad;
    }
  }
  return {bad == 0 && done >= kMinPadding,
          "padding " + std::to_string(done) + " samples agree, " + std::to_string(bad) + " differ"};
}

// 6. Covariance laws over all combinations on random parameters.
Outcome covariance() {
  const std::vector<SliceCase> cases{{2, 2, 2, 0}, {3, 3, 2, 0}, {2, 1, 0, 0}, {3, 1, 0, 0}, {3, 2, 0, 0}};
  const std::vector<Scalar> lambdas{Scalar(1), Scalar(-1), Scalar::root_of_unity(4)};
  Rng rng(kSeed);
  size_t checked = 0, bad = 0;
  for (const auto& c : cases)
    for (size_t t = 0; t < kCovarianceParamsPerCase; ++t) {
      const auto p = random_params(c.spec(), rng);
      for (const auto& lam : lambdas)
        for (int eps : {1, -1})
          for (auto star : {AntiAuto::Identity, AntiAuto::Transpose}) {
            ++checked;
            if (!check_covariance(p, lam, eps, star)) ++bad;
          }
    }
  return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " covariance checks hold"};
}

struct Criterion {
  int id;
  std::string name;
  double budget;  // seconds; zero means no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed-form recursion", kClosedFormBudget, closed_forms},
      {2, "Cartan transpose", kCartanBudget,
       [] {
         const auto r = qf::cli::run_suite("cartan", options(1));
         return from_report(r, standard_fixtures().size());
       }},
      {3, "psi embedding", kPsiBudget,
       [] { return from_report(qf::cli::run_suite("psi", options(kPsiTrialsPerRank)), kMinPsi); }},
      {4, "Lagrangian compatibility", 0,
       [] { return from_report(qf::cli::run_suite("lagrangian", options(kLagrangianTrialsPerRank)), kMinLagrangian); }},
      {5, "series inverse and parameter symmetries", kSeriesParamsBudget,
       [] {
         const std::vector<SliceCase> cases{{2, 2, 1, 1}, {3, 3, 1, 1}, {2, 1, 0, 0}, {3, 1, 0, 0}, {3, 2, 0, 0}};
         const size_t need = kSeriesTrialsPerCase * cases.size();
         return merge(from_report(qf::cli::run_suite("series", options(kSeriesTrialsPerCase, cases)), need),
                      from_report(qf::cli::run_suite("params", options(kSeriesTrialsPerCase, cases)), need));
       }},
      {6, "covariance", kCovarianceBudget, covariance},
      {7, "slice containment", 0,
       [] { return from_report(qf::cli::run_suite("slice", options(kSliceTrialsPerCase)), 6 * kSliceTrialsPerCase); }},
      {8, "involution correspondence", kInvolutionsBudget,
       [] {
         const std::vector<SliceCase> cases{{2, 2, 1, 1}, {2, 2, 2, 0}, {3, 3, 1, 1}, {2, 1, 0, 0}, {3, 2, 0, 0}};
         return from_report(qf::cli::run_suite("involutions", options(kInvolutionTrialsPerCase, cases)),
                            kInvolutionTrialsPerCase * cases.size());
       }},
      {9, "fixed-point census", 0,
       [] { return from_report(qf::cli::run_suite("classify", options(kClassifyTrialsPerCase)), kMinClassify); }},
      {10, "zero padding and C/D table", 0, [] { return merge(padding_check(), table_check()); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = seconds_since(t0);
    std::string detail = o.detail;
    if (c.budget > 0 && secs >= c.budget) {
      o.pass = false;
      detail += "; over the " + std::to_string(c.budget) + " s budget";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d %-42s %s  [%.2f s] %s\n", c.id, c.name.c_str(), o.pass ? "PASS" : "FAIL", secs,
                detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
