#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "quiverfold/fixtures.hpp"
#include "quiverfold/foldfix.hpp"
#include "quiverfold/json_io.hpp"

using namespace qf;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = qf::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Json parse(const Result& r) { return Json::parse(r.out); }

const Json kContext = {{"fixture", "a3-involution"}, {"v", {1, 2, 1}}, {"w", {0, 2, 0}}, {"w_plus", 1}};

}  // namespace

TEST(Cli, NonemptyReport) {
  const auto r = run_cli({"nonempty", "--n", "2", "--k", "2", "--v", "1,2,1"});
  ASSERT_EQ(r.code, qf::cli::kExitOk);
  EXPECT_EQ(parse(r), (Json{{"ell", 0}, {"nonempty", true}, {"s", {0, 0}}}));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, qf::cli::kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, qf::cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).code, qf::cli::kExitUsage);
  EXPECT_EQ(run_cli({"nonempty", "--n", "2", "--k", "2", "--v", "1,2"}).code, qf::cli::kExitUsage);
  EXPECT_EQ(run_cli({"phi1", "/does/not/exist.json", "--n", "2", "--k", "2"}).code, qf::cli::kExitUsage);
}

TEST(Cli, SampleFailureIsACleanReport) {
  const auto r = run_cli({"sample", "--fixture", "a3-involution", "--v", "0,3,0", "--w", "0,2,0"});
  EXPECT_EQ(r.code, qf::cli::kExitOk);
  EXPECT_EQ(parse(r).at("status"), "failure");
}

TEST(Cli, SampleIsByteDeterministic) {
  const std::vector<std::string> args{"sample", "--fixture", "a3-involution", "--v", "1,2,1", "--w", "0,2,0",
                                      "--seed", "12"};
  const auto a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse(a).at("status"), "ok");
  EXPECT_NE(a.out, run_cli({"sample", "--fixture", "a3-involution", "--v", "1,2,1", "--w", "0,2,0", "--seed", "13"}).out);
}

TEST(Cli, VerifyIsByteDeterministic) {
  const std::vector<std::string> args{"verify", "--suite", "series", "--trials", "3", "--seed", "5"};
  const auto a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.code, qf::cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse(a).at("failures"), Json::array());
  EXPECT_FALSE(parse(a).contains("wall_seconds"));
}

TEST(Cli, VerifyInsufficientSamplesFails) {
  const auto r = run_cli({"verify", "--suite", "cartan", "--quota", "1.5"});
  EXPECT_EQ(r.code, qf::cli::kExitVerifyFailed);
}

TEST(Cli, Phi1OnZeroDatumIsTheBasePoint) {
  // v = 0 makes the zero datum stable, and all its parameters vanish.
  const auto q = std::make_shared<const Quiver>(a_involution(2).quiver);
  const Json x = to_json(AdhmDatum::zero(q, {0, 0, 0}, {0, 2, 0}), "A3");
  const auto r = run_cli({"phi1", "-", "--n", "2", "--k", "2", "--wplus", "2", "--wminus", "0"}, x.dump());
  ASSERT_EQ(r.code, qf::cli::kExitOk) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(matrix_from_json(j.at("matrix")), build_triple(make_slice_spec(2, 2)).E);
  EXPECT_EQ(j.at("in_slice"), true);
  EXPECT_EQ(j.at("theta_check"), true);

  const Json unstable = to_json(AdhmDatum::zero(q, {1, 2, 1}, {0, 2, 0}), "A3");
  EXPECT_EQ(run_cli({"phi1", "-", "--n", "2", "--k", "2"}, unstable.dump()).code, qf::cli::kExitUsage);
}

TEST(Cli, FoldFixture) {
  const auto r = run_cli({"fold", "--fixture", "a5-involution"});
  ASSERT_EQ(r.code, qf::cli::kExitOk) << r.err;
  EXPECT_EQ(parse(r).at("transpose_holds"), true);
  EXPECT_EQ(run_cli({"fold", "--fixture", "no-such-quiver"}).code, qf::cli::kExitUsage);
}

TEST(Cli, EmbedThenClassifyRoundTrips) {
  const auto ctx = make_type_a_fold_context(2, {1, 2, 1}, {0, 2, 0}, 1);
  const auto ds = enumerate_decompositions(ctx);
  const auto& d = ds[1];
  const auto y = sample_split_point(ctx, d, 3);
  ASSERT_TRUE(y.datum) << y.diagnostic;
  const Json embed_in{{"context", kContext}, {"vt", to_json(ctx, d)}, {"y", to_json(*y.datum, "split")}};
  const auto e = run_cli({"embed", "-"}, embed_in.dump());
  ASSERT_EQ(e.code, qf::cli::kExitOk) << e.err;
  const Json classify_in{{"context", kContext}, {"x", parse(e)}};
  const auto c = run_cli({"classify-fixed", "-"}, classify_in.dump());
  ASSERT_EQ(c.code, qf::cli::kExitOk) << c.err;
  const auto j = parse(c);
  EXPECT_EQ(j.at("fixed"), true);
  EXPECT_EQ(j.at("vt"), to_json(ctx, d));
}
