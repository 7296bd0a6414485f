#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "quiverfold/fixtures.hpp"
#include "quiverfold/json_io.hpp"
#include "quiverfold/linalg.hpp"
#include "quiverfold/maffei.hpp"
#include "suites.hpp"

namespace qf::cli {

namespace {

/// Bad input: reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return Json::parse(in);
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw UsageError("invalid JSON in " + path + ": " + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string normalize(std::string s) {
  for (auto& c : s) c = c == ' ' || c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  s.erase(std::remove(s.begin(), s.end(), ','), s.end());
  return s;
}

// Fixture names are matched after lowercasing and turning spaces into
// dashes ("A3 involution" -> "a3-involution"); a<odd>-involution and
// d<m>-involution work for any rank.
QuiverWithAut find_fixture(const std::string& name) {
  const std::string key = normalize(name);
  for (auto& f : standard_fixtures())
    if (normalize(f.name) == key) return f;
  std::smatch m;
  static const std::regex a_re("a([0-9]+)-involution"), d_re("d([0-9]+)-involution");
  if (std::regex_match(key, m, a_re)) {
    const int r = std::stoi(m[1]);
    if (r % 2 == 1) return a_involution((r + 1) / 2);
  }
  if (std::regex_match(key, m, d_re)) {
    const int r = std::stoi(m[1]);
    if (r >= 3) return d_involution(r - 1);
  }
  throw UsageError("unknown fixture '" + name + "'");
}

std::vector<size_t> parse_dims(const std::string& text) {
  std::vector<size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      const long v = std::stol(item, &pos);
      if (v < 0 || pos != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<size_t>(v));
    } catch (const std::exception&) {
      throw UsageError("bad dimension list '" + text + "'");
    }
  }
  return out;
}

// Dimension vector given as an array in vertex order or an object keyed by id.
std::vector<size_t> dims_from_json(const Quiver& q, const Json& j) {
  std::vector<size_t> out(q.num_vertices(), 0);
  if (j.is_array()) {
    if (j.size() != q.num_vertices()) throw UsageError("dimension vector has the wrong length");
    for (size_t i = 0; i < out.size(); ++i) out[i] = j[i].get<size_t>();
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) out.at(q.vertex_index(it.key())) = it.value().get<size_t>();
  }
  return out;
}

struct LoadedQuiver {
  std::string ref;
  Quiver quiver;
  AdmAut aut;
};

// {"fixture": name} or {"quiver": {...}, "automorphism": {...}}.
LoadedQuiver load_quiver(const Json& j) {
  if (j.contains("fixture")) {
    auto f = find_fixture(j["fixture"].get<std::string>());
    return {normalize(f.name), std::move(f.quiver), std::move(f.aut)};
  }
  Quiver q = quiver_from_json(j.at("quiver"));
  AdmAut a = aut_from_json(q, j.at("automorphism"));
  return {j.value("quiver_ref", std::string("custom")), std::move(q), std::move(a)};
}

struct LoadedContext {
  std::string ref;
  FoldContext ctx;
};

// Context JSON: the quiver (as in load_quiver) plus "v", "w", and optionally
// "phi"/"sigma" maps keyed by vertex id, or "w_plus" for a type-A fixture.
LoadedContext load_context(const Json& j) {
  auto lq = load_quiver(j);
  auto q = std::make_shared<const Quiver>(lq.quiver);
  const auto v = dims_from_json(*q, j.at("v"));
  const auto w = dims_from_json(*q, j.at("w"));
  auto per_vertex = [&](const char* key) -> std::optional<std::vector<Matrix>> {
    if (!j.contains(key)) return std::nullopt;
    std::vector<Matrix> out;
    for (size_t i = 0; i < q->num_vertices(); ++i) out.push_back(matrix_from_json(j[key].at(q->vertex_id(i))));
    return out;
  };
  if (j.contains("w_plus")) {
    static const std::regex a_re("a([0-9]+)-involution");
    std::smatch m;
    const std::string ref = lq.ref;
    if (!std::regex_match(ref, m, a_re)) throw UsageError("w_plus needs an A_{2n-1} involution fixture");
    const int n = (std::stoi(m[1]) + 1) / 2;
    return {lq.ref, make_type_a_fold_context(n, v, w, j["w_plus"].get<size_t>())};
  }
  return {lq.ref, make_fold_context(q, lq.aut, v, w, per_vertex("phi"), per_vertex("sigma"))};
}

Json group_to_json(const Quiver& q, const GroupElement& g) {
  Json j = Json::object();
  for (size_t i = 0; i < g.blocks.size(); ++i) j[q.vertex_id(i)] = to_json(g.blocks[i]);
  return j;
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("QUIVERFOLD_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw UsageError("QUIVERFOLD_SEED is not an unsigned integer");
    }
  }
  return 1;
}

// ---- commands ----

int cmd_fold(const std::string& quiver_path, const std::string& aut_path, const std::string& fixture, int period,
             std::istream& in, std::ostream& out) {
  LoadedQuiver lq;
  if (!fixture.empty()) {
    lq = load_quiver(Json{{"fixture", fixture}});
  } else {
    if (quiver_path.empty() || aut_path.empty()) throw UsageError("fold needs --fixture or both --quiver and --aut");
    Json a = read_json(aut_path, in);
    lq = load_quiver(Json{{"quiver", read_json(quiver_path, in)}, {"automorphism", a}});
  }
  if (period > 0) lq.aut = make_aut(lq.quiver, lq.aut.vperm, lq.aut.aperm, period);
  const auto problems = validate(lq.quiver, lq.aut);
  if (!problems.empty()) {
    emit(out, Json{{"status", "invalid"}, {"violations", problems}});
    return kExitVerifyFailed;
  }
  const auto sq = split_quotient(lq.quiver, lq.aut);
  const auto c = cartan(lq.quiver, lq.aut);
  const auto ct = cartan(sq.split, sq.aut);
  bool transpose = c.size() == ct.size();
  for (size_t i = 0; transpose && i < c.size(); ++i)
    for (size_t j = 0; transpose && j < c.size(); ++j) transpose = ct[i][j] == c[j][i];
  emit(out, Json{{"status", "ok"},
                 {"split_quotient", to_json(sq, lq.quiver)},
                 {"cartan", c},
                 {"cartan_split", ct},
                 {"transpose_holds", transpose}});
  return transpose ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const std::string& suite, SuiteOptions opts, int n, int k, int wp, int wm, bool timing,
               std::ostream& out, std::ostream& err) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  if (n > 0) {
    if (k < 1 || k > n) throw UsageError("--k must satisfy 1 <= k <= n");
    opts.cases = {SliceCase{n, k, k == n ? wp : 0, k == n ? wm : 0}};
    opts.fold_ranks = {n};
  }
  const VerifyReport rep = run_suite(suite, opts);
  emit(out, rep.to_json(timing));
  err << suite << ": " << rep.completed << "/" << rep.requested << " completed, " << rep.failures.size()
      << " failures, " << rep.wall_seconds << " s\n";
  return rep.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_phi1(const std::string& path, int n, int k, int wp, int wm, std::istream& in, std::ostream& out) {
  const SliceCase c{n, k, k == n ? wp : 0, k == n ? wm : 0};
  SliceSpec spec;
  try {
    spec = c.spec();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto q = std::make_shared<const Quiver>(a_involution(n).quiver);
  const AdhmDatum x = adhm_from_json(q, read_json(path, in));
  const FoldContext ctx = fold_context_for(spec, x.v);
  const SliceSpec aligned = aligned_spec(c, ctx);
  const Matrix X = phi1(aligned, x);
  const auto rep = nonempty_typeA(n, k, x.v);
  const Partition bound({2 * n - rep.ell, rep.ell});
  const BilinearForm form = build_form(aligned);
  emit(out, Json{{"matrix", to_json(X)},
                 {"in_slice", in_slice(aligned, X)},
                 {"jordan_type", to_json(jordan_type_nilpotent(X))},
                 {"in_closure_of", to_json(bound)},
                 {"in_orbit_closure", in_orbit_closure(X, bound)},
                 {"form_type", to_string(form.type)},
                 {"theta_check", theta_big(form, X) == phi1(aligned, theta(ctx, x))}});
  return kExitOk;
}

int cmd_embed(const std::string& path, std::istream& in, std::ostream& out) {
  const Json j = read_json(path, in);
  const auto lc = load_context(j.at("context"));
  const Decomposition d = decomposition_from_json(lc.ctx, j.at("vt"));
  const AdhmDatum y = adhm_from_json(lc.ctx.split_quiver, j.at("y"));
  emit(out, to_json(psi_embed(lc.ctx, d, y), lc.ref));
  return kExitOk;
}

int cmd_classify(const std::string& path, std::istream& in, std::ostream& out) {
  const Json j = read_json(path, in);
  const auto lc = load_context(j.at("context"));
  const AdhmDatum x = adhm_from_json(lc.ctx.quiver, j.at("x"));
  const auto fp = classify_fixed(lc.ctx, x);
  if (!fp) {
    emit(out, Json{{"fixed", false}});
    return kExitOk;
  }
  emit(out, Json{{"fixed", true},
                 {"vt", to_json(lc.ctx, fp->d)},
                 {"g", group_to_json(*lc.ctx.quiver, fp->g)},
                 {"h", group_to_json(*lc.ctx.quiver, fp->h)},
                 {"preimage", to_json(fp->preimage, "split")}});
  return kExitOk;
}

int cmd_decompose(const std::string& path, std::istream& in, std::ostream& out) {
  const auto lc = load_context(read_json(path, in).at("context"));
  Json ds = Json::array();
  for (const auto& d : enumerate_decompositions(lc.ctx)) ds.push_back(to_json(lc.ctx, d));
  emit(out, Json{{"context", to_json(lc.ctx)}, {"decompositions", ds}});
  return kExitOk;
}

int cmd_sample(const std::string& fixture, const std::string& quiver_path, const std::string& v_text,
               const std::string& w_text, std::uint64_t seed, bool delta_zero, bool allow_unstable, std::istream& in,
               std::ostream& out) {
  LoadedQuiver lq;
  if (!fixture.empty()) {
    lq = load_quiver(Json{{"fixture", fixture}});
  } else if (!quiver_path.empty()) {
    lq.quiver = quiver_from_json(read_json(quiver_path, in));
    lq.ref = "custom";
  } else {
    throw UsageError("sample needs --fixture or --quiver");
  }
  auto q = std::make_shared<const Quiver>(lq.quiver);
  const auto v = parse_dims(v_text), w = parse_dims(w_text);
  if (v.size() != q->num_vertices() || w.size() != q->num_vertices())
    throw UsageError("--v and --w need one entry per vertex");
  SampleOptions opts;
  opts.delta_zero = delta_zero;
  opts.require_stable = !allow_unstable;
  const auto r = sample_point(q, v, w, seed, opts);
  Json j{{"seed", seed}, {"attempts", r.attempts}};
  if (r.datum) {
    j["status"] = "ok";
    j["datum"] = to_json(*r.datum, lq.ref);
    j["stable"] = is_stable(*r.datum);
  } else {
    j["status"] = "failure";
    j["diagnostic"] = r.diagnostic;
  }
  emit(out, j);
  return kExitOk;
}

int cmd_nonempty(int n, int k, const std::string& v_text, std::ostream& out) {
  if (n < 1 || k < 1 || k > n) throw UsageError("need 1 <= k <= n");
  const auto v = parse_dims(v_text);
  if (v.size() != 2 * static_cast<size_t>(n) - 1) throw UsageError("--v needs 2n-1 entries");
  NonemptyReport r;
  try {
    r = nonempty_typeA(n, k, v);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(out, Json{{"nonempty", r.nonempty}, {"s", r.s}, {"ell", r.ell}});
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"quiverfold: split-quotient folding and Maffei slice maps, in exact arithmetic"};
  app.require_subcommand(1);

  std::string quiver_path, aut_path, fixture;
  int period = 0;
  auto* fold = app.add_subcommand("fold", "Split quotient, Cartan matrices and the transpose check");
  fold->add_option("--quiver", quiver_path, "Quiver JSON file ('-' for stdin)");
  fold->add_option("--aut", aut_path, "Automorphism JSON file");
  fold->add_option("--fixture", fixture, "Built-in fixture instead of files");
  fold->add_option("--period", period, "Override the automorphism period");

  std::string suite;
  SuiteOptions sopts;
  std::optional<std::uint64_t> seed;
  int n = 0, k = 0, wp = 2, wm = 0;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run a randomized verification suite");
  verify->add_option("--suite", suite, "cartan|psi|lagrangian|classify|series|params|involutions|slice")->required();
  verify->add_option("--trials", sopts.trials, "Trials per case");
  verify->add_option("--seed", seed, "Run seed (default: $QUIVERFOLD_SEED or 1)");
  verify->add_option("--quota", sopts.quota, "Minimum completed fraction of trials");
  verify->add_option("--n", n, "Restrict to one case: n (A_{2n-1})");
  verify->add_option("--k", k, "Restrict to one case: k");
  verify->add_option("--wplus", wp, "sigma_n +1 multiplicity when k = n");
  verify->add_option("--wminus", wm, "sigma_n -1 multiplicity when k = n");
  verify->add_flag("--timing", timing, "Include wall time in the report");

  std::string input = "-";
  auto* phi = app.add_subcommand("phi1", "Maffei's map on an A_{2n-1} datum");
  phi->add_option("input", input, "ADHM JSON ('-' for stdin)");
  phi->add_option("--n", n)->required();
  phi->add_option("--k", k)->required();
  phi->add_option("--wplus", wp);
  phi->add_option("--wminus", wm);

  auto* embed = app.add_subcommand("embed", "psi_vt: split-quotient datum to a theta-fixed datum");
  embed->add_option("input", input, "{context, vt, y} JSON ('-' for stdin)");
  auto* classify = app.add_subcommand("classify-fixed", "Decide theta-stability and recover (vt, y)");
  classify->add_option("input", input, "{context, x} JSON ('-' for stdin)");
  auto* decompose = app.add_subcommand("decompose", "List D(v) for a fold context");
  decompose->add_option("input", input, "{context} JSON ('-' for stdin)");

  std::string v_text, w_text;
  bool delta_zero = false, allow_unstable = false;
  auto* sample = app.add_subcommand("sample", "Sample a point of Lambda(V, W)");
  sample->add_option("--fixture", fixture);
  sample->add_option("--quiver", quiver_path);
  sample->add_option("--v", v_text, "Comma-separated, vertex order")->required();
  sample->add_option("--w", w_text, "Comma-separated, vertex order")->required();
  sample->add_option("--seed", seed);
  sample->add_flag("--delta-zero", delta_zero);
  sample->add_flag("--allow-unstable", allow_unstable);

  auto* nonempty = app.add_subcommand("nonempty", "Nonemptiness test for type-A two-row data");
  nonempty->add_option("--n", n)->required();
  nonempty->add_option("--k", k)->required();
  nonempty->add_option("--v", v_text, "Comma-separated v_1..v_{2n-1}")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*fold) return cmd_fold(quiver_path, aut_path, fixture, period, in, out);
    if (*verify) {
      sopts.seed = seed ? *seed : default_seed();
      return cmd_verify(suite, sopts, n, k, wp, wm, timing, out, err);
    }
    if (*phi) return cmd_phi1(input, n, k, wp, wm, in, out);
    if (*embed) return cmd_embed(input, in, out);
    if (*classify) return cmd_classify(input, in, out);
    if (*decompose) return cmd_decompose(input, in, out);
    if (*sample)
      return cmd_sample(fixture, quiver_path, v_text, w_text, seed ? *seed : default_seed(), delta_zero,
                        allow_unstable, in, out);
    if (*nonempty) return cmd_nonempty(n, k, v_text, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qf::cli
