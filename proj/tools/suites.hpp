#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quiverfold/json_io.hpp"
#include "quiverfold/maffei.hpp"

namespace qf::cli {

struct TrialFailure {
  size_t trial = 0;
  std::uint64_t sub_seed = 0;
  std::string label;
  std::string message;
  Json counterexample;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  size_t requested = 0;
  size_t completed = 0;
  size_t skipped = 0;
  size_t checks = 0;  // individual identities verified
  double quota = 0.8;
  std::vector<TrialFailure> failures;
  Json details;  // suite-specific extras, e.g. the classify census
  double wall_seconds = 0;

  bool insufficient() const;
  bool passed() const { return failures.empty() && !insufficient(); }
  // Wall time is only included on request, so default output is byte-stable.
  Json to_json(bool with_timing = false) const;
};

/// One A_{2n-1} slice case: (n, k) and, for k = n, the sigma_n signature.
struct SliceCase {
  int n = 2;
  int k = 2;
  int w_plus = 2;
  int w_minus = 0;

  SliceSpec spec() const { return make_slice_spec(n, k, w_plus, w_minus); }
  std::string label() const;
};

struct SuiteOptions {
  size_t trials = 20;
  std::uint64_t seed = 1;
  double quota = 0.8;
  // Empty means the suite's default cases.
  std::vector<SliceCase> cases;
  // psi suite: A_{2n-1} ranks to fold.
  std::vector<int> fold_ranks{2, 3, 4};
};

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown suite.
VerifyReport run_suite(const std::string& name, const SuiteOptions& opts);

// Dimension vectors for which the sampler reliably finds stable points of
// M(v, w) with w as in small_w. Every entry satisfies nonempty_typeA.
std::vector<std::vector<size_t>> sampling_dims(const SliceCase& c);

// Stable point of Lambda for the case, or nullopt if the sampler gave up.
std::optional<AdhmDatum> sample_slice_point(const SliceCase& c, const std::vector<size_t>& v, std::uint64_t seed);

// The case's slice spec with the sigma_n eigenbasis of ctx filled in.
SliceSpec aligned_spec(const SliceCase& c, const FoldContext& ctx);

// v = (1, 2, ..., k, ..., k, ..., 2, 1) on A_{2n-1}.
std::vector<size_t> staircase_v(int n, int k);

// Per-trial seed derived from the run seed.
std::uint64_t trial_seed(std::uint64_t seed, size_t trial);

}  // namespace qf::cli
