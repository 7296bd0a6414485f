#include "quiverfold/maffei.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "quiverfold/fixtures.hpp"
#include "quiverfold/linalg.hpp"

namespace qf {

const std::vector<Matrix>& MaffeiParams::family(int e, int f) const {
  if (e == 1 && f == 1) return r11;
  if (e == 0 && f == 0) return r00;
  return e == 0 ? r01 : r10;
}

std::vector<Matrix>& MaffeiParams::family(int e, int f) {
  return const_cast<std::vector<Matrix>&>(static_cast<const MaffeiParams&>(*this).family(e, f));
}

void MaffeiParams::validate() const {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("maffei params: need 1 <= k <= n");
  if ((regime == Regime::KEqualsN) != (k == n)) throw std::invalid_argument("maffei params: regime does not match k, n");
  const size_t len11 = static_cast<size_t>(steps());
  const size_t lenk = regime == Regime::KLessThanN ? static_cast<size_t>(k) : 0;
  if (r11.size() != len11 || r00.size() != lenk || r01.size() != lenk || r10.size() != lenk)
    throw std::invalid_argument("maffei params: wrong family lengths");
  for (const auto* fam : {&r00, &r01, &r10, &r11})
    for (const auto& x : *fam)
      if (x.rows() != r || x.cols() != r) throw std::invalid_argument("maffei params: entries must be r x r");
}

MaffeiParams zero_params(const SliceSpec& spec) {
  spec.validate();
  MaffeiParams p;
  p.regime = spec.k_equals_n() ? Regime::KEqualsN : Regime::KLessThanN;
  p.n = spec.n;
  p.k = spec.k;
  p.r = spec.r();
  const Matrix z(p.r, p.r);
  p.r11.assign(static_cast<size_t>(p.steps()), z);
  if (p.regime == Regime::KLessThanN) {
    p.r00.assign(static_cast<size_t>(p.k), z);
    p.r01 = p.r00;
    p.r10 = p.r00;
  }
  return p;
}

MaffeiParams random_params(const SliceSpec& spec, Rng& rng) {
  MaffeiParams p = zero_params(spec);
  for (auto* fam : {&p.r00, &p.r01, &p.r10, &p.r11})
    for (auto& x : *fam) x = rng.matrix(p.r, p.r);
  return p;
}

const StepLayout::Block* StepLayout::find(int id) const {
  for (const auto& b : blocks)
    if (b.id == id) return &b;
  return nullptr;
}

size_t StepLayout::jside() const {
  size_t s = 0;
  for (const auto& b : blocks) s += b.size;
  return s;
}

namespace {

StepLayout layout_for(const MaffeiParams& p, int j) {
  StepLayout l;
  const int m = p.m();
  const size_t ju = static_cast<size_t>(j);
  if (p.regime == Regime::KEqualsN || j < m) {
    l.blocks.push_back({1, ju, 0, 0, 0});
  } else {
    const size_t s0 = static_cast<size_t>(j - m);
    l.blocks.push_back({0, s0, 0, 0, m / 2});
    l.blocks.push_back({1, ju, s0, s0 + 1, 0});
  }
  return l;
}

struct Slot {
  bool in_m;
  size_t row, col;  // R-entry position
  int weight;
  int e, f, a, b;
};

// Positions of alpha/beta^{e,f}_{j;a,b} allowed by condition (A).
std::optional<std::pair<size_t, size_t>> slot_position(const StepLayout& l, int m, int j, bool in_m, int e, int f,
                                                       int a, int b) {
  const auto* be = l.find(e);
  const auto* bf = l.find(f);
  if (!be || !bf || b < 1) return std::nullopt;
  if (e == f || e == 0) {
    if (a < b || a > static_cast<int>(be->size)) return std::nullopt;
  } else if (a < m + 1 || a > j || b > a - m) {
    return std::nullopt;
  }
  const size_t au = static_cast<size_t>(a), bu = static_cast<size_t>(b);
  if (in_m) return std::make_pair(be->start + au - 1, bf->start1 + bu - 1);
  return std::make_pair(be->start1 + au, bf->start + bu - 1);
}

std::vector<Slot> slots_for(const StepLayout& l, int m, int j) {
  std::vector<Slot> out;
  for (const auto& be : l.blocks)
    for (const auto& bf : l.blocks) {
      const int e = be.id, f = bf.id;
      int alo = 1, ahi = static_cast<int>(be.size);
      if (e == 1 && f == 0) {
        alo = m + 1;
        ahi = j;
      }
      for (int a = alo; a <= ahi; ++a) {
        const int bhi = (e == 1 && f == 0) ? a - m : a;
        for (int b = 1; b <= bhi; ++b) {
          const int w = a - b + (f - e) * (m / 2) + 1;
          for (bool in_m : {true, false}) {
            const auto pos = slot_position(l, m, j, in_m, e, f, a, b);
            if (!pos) throw std::logic_error("maffei: slot outside its block");
            out.push_back({in_m, pos->first, pos->second, w, e, f, a, b});
          }
        }
      }
    }
  return out;
}

Matrix get_r(const Matrix& x, size_t r, size_t p, size_t q) { return x.block(p * r, q * r, r, r); }
void set_r(Matrix& x, size_t r, size_t p, size_t q, const Matrix& v) { x.set_block(p * r, q * r, v); }

struct StepData {
  StepLayout l;
  size_t nj, nj1;
  std::vector<int> hj, hj1;    // heights on the j- and (j+1)-sides
  std::vector<int> blk_j1;     // block id of each (j+1)-side position
  std::vector<std::vector<bool>> oneM, oneN;
  Matrix E, F;                 // scalar (j+1)-side matrices
};

StepData step_data(const MaffeiParams& p, int j) {
  StepData d;
  d.l = layout_for(p, j);
  d.nj = d.l.jside();
  d.nj1 = d.nj + d.l.blocks.size();
  d.hj.assign(d.nj, 0);
  d.hj1.assign(d.nj1, 0);
  d.blk_j1.assign(d.nj1, 0);
  d.oneM.assign(d.nj, std::vector<bool>(d.nj1, false));
  d.oneN.assign(d.nj1, std::vector<bool>(d.nj, false));
  std::vector<Matrix> es, fs;
  for (const auto& b : d.l.blocks) {
    for (size_t a = 0; a < b.size; ++a) {
      d.hj[b.start + a] = static_cast<int>(a) + 1 + b.height;
      d.oneM[b.start + a][b.start1 + a + 1] = true;
      d.oneN[b.start1 + a][b.start + a] = true;
    }
    for (size_t x = 0; x <= b.size; ++x) {
      d.hj1[b.start1 + x] = static_cast<int>(x) + 1 + b.height;
      d.blk_j1[b.start1 + x] = b.id;
    }
    const auto t = sl2_block(b.size + 1);
    es.push_back(t.E);
    fs.push_back(t.F);
  }
  d.E = block_diag(es);
  d.F = block_diag(fs);
  return d;
}

Matrix lift(const Matrix& s, size_t r) { return kron(s, Matrix::identity(r)); }

}  // namespace

std::optional<Matrix> RecursionState::alpha(int j, int e, int f, int a, int b) const {
  if (j < 1 || j > static_cast<int>(steps.size())) return std::nullopt;
  const auto& st = step(j);
  const auto pos = slot_position(st.layout, params.m(), j, true, e, f, a, b);
  if (!pos) return std::nullopt;
  return get_r(st.M, params.r, pos->first, pos->second);
}

std::optional<Matrix> RecursionState::beta(int j, int e, int f, int a, int b) const {
  if (j < 1 || j > static_cast<int>(steps.size())) return std::nullopt;
  const auto& st = step(j);
  const auto pos = slot_position(st.layout, params.m(), j, false, e, f, a, b);
  if (!pos) return std::nullopt;
  return get_r(st.N, params.r, pos->first, pos->second);
}

Matrix RecursionState::product() const {
  const auto& last = steps.back();
  return last.M * last.N;
}

RecursionState run_recursion(const MaffeiParams& params, const RecursionOptions& opts) {
  params.validate();
  const size_t r = params.r;
  const int m = params.m();
  RecursionState state;
  state.params = params;
  Matrix prev = Matrix(r, r);  // N_0 M_0
  for (int j = 1; j <= params.steps(); ++j) {
    const StepData d = step_data(params, j);
    RecursionStep st;
    st.j = j;
    st.layout = d.l;
    st.M = Matrix(d.nj * r, d.nj1 * r);
    st.N = Matrix(d.nj1 * r, d.nj * r);
    const Matrix id = Matrix::identity(r);
    for (size_t p = 0; p < d.nj; ++p)
      for (size_t q = 0; q < d.nj1; ++q) {
        if (d.oneM[p][q]) set_r(st.M, r, p, q, id);
        if (d.oneN[q][p]) set_r(st.N, r, q, p, id);
      }

    // Right-hand side of (B).
    Matrix target = prev;
    for (const auto& be : d.l.blocks)
      for (const auto& bf : d.l.blocks) {
        if (be.size == 0 || bf.size == 0) continue;
        const Matrix& val = (be.id == 1 && bf.id == 1)
                                ? params.r11.at(static_cast<size_t>(j - 1))
                                : params.family(be.id, bf.id).at(static_cast<size_t>(j - m - 1));
        const size_t p = be.start + be.size - 1, q = bf.start;
        set_r(target, r, p, q, get_r(target, r, p, q) + val);
      }

    const auto slots = slots_for(d.l, m, j);
    int wmax = 0;
    for (const auto& s : slots) wmax = std::max(wmax, s.weight);
    const Matrix Fr = lift(d.F, r), Er = lift(d.E, r);

    for (int w = 1; w <= wmax; ++w) {
      std::vector<const Slot*> unknowns;
      for (const auto& s : slots)
        if (s.weight == w) unknowns.push_back(&s);
      if (unknowns.empty()) continue;
      const Matrix P = st.M * st.N;
      const Matrix Y = st.N * st.M - Er;
      const Matrix Z = Y * Fr - Fr * Y;

      // (kind, p, q): kind 0 for (B), 1 for (C).
      std::vector<std::tuple<int, size_t, size_t>> eqs;
      for (size_t p = 0; p < d.nj; ++p)
        for (size_t q = 0; q < d.nj; ++q)
          if (d.hj[p] - d.hj[q] + 1 == w) eqs.emplace_back(0, p, q);
      for (size_t p = 0; p < d.nj1; ++p)
        for (size_t q = 0; q < d.nj1; ++q)
          if (d.hj1[p] - d.hj1[q] == w) eqs.emplace_back(1, p, q);
      if (opts.shuffle_seed != 0) {
        std::mt19937_64 eng(opts.shuffle_seed + static_cast<std::uint64_t>(j) * 1000003u + static_cast<std::uint64_t>(w));
        std::shuffle(eqs.begin(), eqs.end(), eng);
      }

      // Coefficient of u in Y(s, t) = (N M)(s, t).
      auto coef_y = [&](const Slot& u, size_t s, size_t t) -> long {
        if (!u.in_m && u.row == s && d.oneM[u.col][t]) return 1;
        if (u.in_m && u.col == t && d.oneN[s][u.row]) return 1;
        return 0;
      };
      Matrix A(eqs.size(), unknowns.size()), B(eqs.size(), r * r);
      for (size_t e = 0; e < eqs.size(); ++e) {
        const auto [kind, p, q] = eqs[e];
        Matrix rhs;
        if (kind == 0) {
          rhs = get_r(target, r, p, q) - get_r(P, r, p, q);
          for (size_t c = 0; c < unknowns.size(); ++c) {
            const Slot& u = *unknowns[c];
            if ((u.in_m && u.row == p && d.oneN[u.col][q]) || (!u.in_m && u.col == q && d.oneM[p][u.row]))
              A(e, c) += 1;
          }
        } else {
          rhs = -get_r(Z, r, p, q);
          for (size_t c = 0; c < unknowns.size(); ++c) {
            const Slot& u = *unknowns[c];
            Scalar coef;
            if (q + 1 < d.nj1 && d.blk_j1[q + 1] == d.blk_j1[q]) coef += Scalar(coef_y(u, p, q + 1)) * d.F(q + 1, q);
            if (p >= 1 && d.blk_j1[p - 1] == d.blk_j1[p]) coef -= d.F(p, p - 1) * Scalar(coef_y(u, p - 1, q));
            A(e, c) = coef;
          }
        }
        for (size_t a = 0; a < r; ++a)
          for (size_t b = 0; b < r; ++b) B(e, a * r + b) = rhs(a, b);
      }
      const auto sol = solve_linear(A, B);
      if (!sol)
        throw std::logic_error("run_recursion: inconsistent system at step " + std::to_string(j) + ", weight " +
                               std::to_string(w));
      if (sol->kernel.cols() != 0)
        throw std::logic_error("run_recursion: system at step " + std::to_string(j) + ", weight " +
                               std::to_string(w) + " does not determine its unknowns");
      for (size_t c = 0; c < unknowns.size(); ++c) {
        Matrix val(r, r);
        for (size_t a = 0; a < r; ++a)
          for (size_t b = 0; b < r; ++b) val(a, b) = sol->particular(c, a * r + b);
        set_r(unknowns[c]->in_m ? st.M : st.N, r, unknowns[c]->row, unknowns[c]->col, val);
      }
    }

    const Matrix NM = st.N * st.M;
    if (st.M * st.N != target) throw std::logic_error("run_recursion: condition (B) fails at step " + std::to_string(j));
    if (!commutator(NM - Er, Fr).is_zero())
      throw std::logic_error("run_recursion: condition (C) fails at step " + std::to_string(j));
    prev = NM;
    state.steps.push_back(std::move(st));
  }
  return state;
}

namespace {

std::string vid(long i) { return std::to_string(i); }

void check_small_dims(const SliceSpec& spec, const AdhmDatum& x) {
  spec.validate();
  const Quiver& q = *x.quiver;
  const size_t len = 2 * static_cast<size_t>(spec.n) - 1;
  if (q.num_vertices() != len) throw std::invalid_argument("maffei: datum is not on A_{2n-1}");
  for (size_t i = 1; i <= len; ++i)
    if (!q.has_vertex(vid(static_cast<long>(i)))) throw std::invalid_argument("maffei: expected vertices 1..2n-1");
  const auto w = small_w(spec);
  for (size_t i = 1; i <= len; ++i)
    if (x.w[q.vertex_index(vid(static_cast<long>(i)))] != w[i - 1])
      throw std::invalid_argument("maffei: w is not supported at k and 2n-k as required");
}

// Delta_s B_{s, turn, t} Gamma_t.
Matrix loop_value(const AdhmDatum& x, long s, long turn, long t) {
  const Quiver& q = *x.quiver;
  const size_t is = q.vertex_index(vid(s)), it = q.vertex_index(vid(t));
  return x.Delta[is] * path_product(x, std::vector<std::string>{vid(s), vid(turn), vid(t)}) * x.Gamma[it];
}

Scalar sign(long e) { return e % 2 == 0 ? Scalar(1) : Scalar(-1); }

}  // namespace

std::vector<size_t> small_w(const SliceSpec& spec) {
  spec.validate();
  std::vector<size_t> w(2 * static_cast<size_t>(spec.n) - 1, 0);
  if (spec.k_equals_n()) {
    w[static_cast<size_t>(spec.n) - 1] = 2;
  } else {
    w[static_cast<size_t>(spec.k) - 1] = 1;
    w[static_cast<size_t>(2 * spec.n - spec.k) - 1] = 1;
  }
  return w;
}

MaffeiParams extract_params(const SliceSpec& spec, const AdhmDatum& x) {
  check_small_dims(spec, x);
  MaffeiParams p = zero_params(spec);
  const long n = spec.n, k = spec.k;
  if (spec.k_equals_n()) {
    const Matrix basis = spec.wn_basis ? *spec.wn_basis : Matrix::identity(2);
    const Matrix inv = inverse(basis);
    for (long j = 1; j <= n; ++j) p.r11[static_cast<size_t>(j - 1)] = inv * loop_value(x, n, n - j + 1, n) * basis;
    return p;
  }
  const long kb = 2 * n - k;
  for (long j = 1; j <= k; ++j) {
    const size_t i = static_cast<size_t>(j - 1);
    p.r00[i] = loop_value(x, k, k - j + 1, k);
    p.r01[i] = loop_value(x, k, k - j + 1, kb) * sign(n - k);
    p.r10[i] = loop_value(x, kb, k - j + 1, k);
  }
  for (long j = 1; j <= kb; ++j)
    p.r11[static_cast<size_t>(j - 1)] = loop_value(x, kb, kb - j + 1, kb) * sign(std::min(j - 1, n - k));
  return p;
}

Matrix phi1_unchecked(const SliceSpec& spec, const AdhmDatum& x) {
  return run_recursion(extract_params(spec, x)).product();
}

Matrix phi1(const SliceSpec& spec, const AdhmDatum& x) {
  check_small_dims(spec, x);
  if (!in_lambda(x)) throw std::invalid_argument("phi1: datum violates the moment relations");
  if (!is_stable(x)) throw std::invalid_argument("phi1: datum is not stable");
  return phi1_unchecked(spec, x);
}

namespace {

size_t arrow_between(const Quiver& q, size_t s, size_t t) {
  for (size_t h = 0; h < q.num_arrows(); ++h)
    if (q.arrow(h).src == s && q.arrow(h).tgt == t) return h;
  throw std::invalid_argument("maffei: missing arrow " + q.vertex_id(s) + " -> " + q.vertex_id(t));
}

}  // namespace

bool check_series_inverse(const AdhmDatum& x) {
  const Quiver& q = *x.quiver;
  const size_t len = q.num_vertices();
  if (len % 2 == 0) throw std::invalid_argument("check_series_inverse: expected A_{2n-1}");
  const size_t n = (len + 1) / 2;
  std::vector<size_t> idx(len), voff(len + 1, 0), woff(len + 1, 0);
  for (size_t i = 0; i < len; ++i) {
    idx[i] = q.vertex_index(vid(static_cast<long>(i + 1)));
    voff[i + 1] = voff[i] + x.v[idx[i]];
    woff[i + 1] = woff[i] + x.w[idx[i]];
  }
  const size_t V = voff[len], W = woff[len];
  Matrix A(V, V), B(V, V), G(V, W), D(W, V);
  for (size_t i = 0; i + 1 < len; ++i) {
    A.set_block(voff[i + 1], voff[i], x.B[arrow_between(q, idx[i], idx[i + 1])]);
    // 1-based lower vertex i+1; + below n, - from n on.
    const Scalar s = i + 1 < n ? Scalar(1) : Scalar(-1);
    B.set_block(voff[i], voff[i + 1], x.B[arrow_between(q, idx[i + 1], idx[i])] * s);
  }
  for (size_t i = 0; i < len; ++i) {
    G.set_block(voff[i], woff[i], x.Gamma[idx[i]]);
    D.set_block(woff[i], voff[i], x.Delta[idx[i]]);
  }
  auto powers = [V](const Matrix& m) {
    std::vector<Matrix> out{Matrix::identity(V)};
    while (!out.back().is_zero() && out.size() <= V + 1) out.push_back(out.back() * m);
    if (!out.back().is_zero()) throw std::logic_error("check_series_inverse: map is not nilpotent");
    out.pop_back();
    return out;
  };
  const auto Ap = powers(A), Bp = powers(B);
  const size_t deg = Ap.size() + Bp.size();
  std::vector<Matrix> X(deg + 1, Matrix(W, W)), Y(deg + 1, Matrix(W, W));
  X[0] = Matrix::identity(W);
  Y[0] = Matrix::identity(W);
  for (size_t a = 0; a < Ap.size(); ++a)
    for (size_t b = 0; b < Bp.size(); ++b) {
      X[a + b + 2] -= D * Ap[a] * Bp[b] * G;
      Y[a + b + 2] += D * Bp[b] * Ap[a] * G;
    }
  for (size_t d = 0; d <= 2 * deg; ++d) {
    Matrix c(W, W);
    for (size_t a = 0; a <= d; ++a)
      if (a <= deg && d - a <= deg) c += X[a] * Y[d - a];
    if (d == 0 ? !c.is_identity() : !c.is_zero()) return false;
  }
  return true;
}

bool check_param_symmetries(const SliceSpec& spec, const FoldContext& ctx, const AdhmDatum& x) {
  check_small_dims(spec, x);
  const long n = spec.n, k = spec.k;
  if (spec.k_equals_n()) {
    const size_t vn = ctx.quiver->vertex_index(vid(n));
    const Matrix& basis = ctx.eigenbasis.at(ctx.sq.rep_of[vn]);
    const Matrix inv = inverse(basis);
    const Matrix sig = inv * ctx.sigma[vn] * basis;
    const Matrix g = wn_skew_gram() * sig;
    const Matrix ginv = inverse(g);
    for (long j = 1; j <= n; ++j) {
      const Matrix lhs = inv * loop_value(x, n, n - j + 1, n) * basis;
      const Matrix rhs = inv * loop_value(x, n, n + j - 1, n) * basis;
      if (ginv * lhs.transpose() * g != sig * rhs * sig * sign(j)) return false;
    }
    return true;
  }
  const long kb = 2 * n - k;
  for (long j = 1; j <= k; ++j) {
    if (loop_value(x, k, k - j + 1, k) != loop_value(x, kb, kb + j - 1, kb) * sign(j)) return false;
    if (loop_value(x, k, k - j + 1, kb) != loop_value(x, k, kb + j - 1, kb) * sign(j - 1)) return false;
    if (loop_value(x, kb, k - j + 1, k) != loop_value(x, kb, kb + j - 1, k) * sign(j - 1)) return false;
  }
  for (long j = 1; j <= kb; ++j)
    if (loop_value(x, kb, kb - j + 1, kb) != loop_value(x, k, k + j - 1, k) * sign(j)) return false;
  return true;
}

namespace {

Matrix apply_star(const Matrix& x, AntiAuto star) { return star == AntiAuto::Transpose ? x.transpose() : x; }

}  // namespace

bool check_covariance(const MaffeiParams& params, const Scalar& lambda, int epsilon, AntiAuto star) {
  params.validate();
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("check_covariance: epsilon must be +1 or -1");
  const int m = params.m();
  const bool use_star = !(params.regime == Regime::KEqualsN && star == AntiAuto::Identity);
  const Scalar eps(epsilon);

  // Scaling factor of an entry with indices (e, f, a, b).
  auto factor = [&](int e, int f, int a, int b) {
    Scalar s = lambda.pow(a - b + (f - e) * (m / 2) + 1);
    return e == f ? s : s * eps;
  };

  MaffeiParams t = params;
  for (int e = 0; e <= 1; ++e)
    for (int f = 0; f <= 1; ++f) {
      if (params.regime == Regime::KEqualsN && (e != 1 || f != 1)) continue;
      auto& fam = t.family(e, f);
      for (size_t i = 0; i < fam.size(); ++i) {
        const long j = static_cast<long>(i) + 1;
        fam[i] = e == f ? fam[i] * lambda.pow(j) : fam[i] * (lambda.pow(j + m / 2) * eps);
      }
    }
  if (use_star) {
    MaffeiParams s = t;
    s.r00.clear();
    s.r01.clear();
    s.r10.clear();
    s.r11.clear();
    for (const auto& x : t.r00) s.r00.push_back(apply_star(x, star));
    for (const auto& x : t.r10) s.r01.push_back(apply_star(x, star));
    for (const auto& x : t.r01) s.r10.push_back(apply_star(x, star));
    for (const auto& x : t.r11) s.r11.push_back(apply_star(x, star));
    t = std::move(s);
  }

  const RecursionState orig = run_recursion(params);
  const RecursionState moved = run_recursion(t);
  for (int j = 1; j <= params.steps(); ++j) {
    for (const auto& slot : slots_for(orig.step(j).layout, m, j)) {
      const auto got = slot.in_m ? moved.alpha(j, slot.e, slot.f, slot.a, slot.b)
                                 : moved.beta(j, slot.e, slot.f, slot.a, slot.b);
      std::optional<Matrix> expected;
      if (use_star) {
        const int as = j + (slot.f - 1) * m - slot.b + 1;
        const int bs = j + (slot.e - 1) * m - slot.a + 1;
        const auto src = slot.in_m ? orig.beta(j, slot.f, slot.e, as, bs) : orig.alpha(j, slot.f, slot.e, as, bs);
        if (src) expected = apply_star(*src, star) * factor(slot.f, slot.e, as, bs);
      } else {
        const auto src = slot.in_m ? orig.alpha(j, slot.e, slot.f, slot.a, slot.b)
                                   : orig.beta(j, slot.e, slot.f, slot.a, slot.b);
        if (src) expected = *src * factor(slot.e, slot.f, slot.a, slot.b);
      }
      if (!got || !expected || *got != *expected) return false;
    }
  }
  return true;
}

bool check_involution_correspondence(const SliceSpec& spec, const FoldContext& ctx, const AdhmDatum& x) {
  SliceSpec s = spec;
  if (s.k_equals_n()) {
    const size_t vn = ctx.quiver->vertex_index(vid(spec.n));
    const size_t rep = ctx.sq.rep_of[vn];
    const auto& ws = ctx.w_split.at(rep);
    if (ws.size() != 2 || static_cast<int>(ws[0]) != spec.w_plus || static_cast<int>(ws[1]) != spec.w_minus)
      throw std::invalid_argument("check_involution_correspondence: sigma_n signature does not match the slice spec");
    s.wn_basis = ctx.eigenbasis[rep];
  }
  const BilinearForm form = build_form(s);
  return theta_big(form, phi1(s, x)) == phi1(s, theta(ctx, x));
}

AdhmDatum pad_with_zeros(const AdhmDatum& x) {
  const Quiver& q = *x.quiver;
  const size_t len = q.num_vertices();
  if (len % 2 == 0) throw std::invalid_argument("pad_with_zeros: expected A_{2n-1}");
  const int n = static_cast<int>((len + 1) / 2);
  auto big = std::make_shared<const Quiver>(a_involution(n + 1).quiver);
  std::vector<size_t> v(big->num_vertices(), 0), w(big->num_vertices(), 0);
  auto old_index = [&](size_t i) -> std::optional<size_t> {
    const long id = std::stol(big->vertex_id(i)) - 1;
    if (id < 1 || id > static_cast<long>(len)) return std::nullopt;
    return q.vertex_index(vid(id));
  };
  for (size_t i = 0; i < big->num_vertices(); ++i)
    if (const auto o = old_index(i)) {
      v[i] = x.v[*o];
      w[i] = x.w[*o];
    }
  AdhmDatum y = AdhmDatum::zero(big, v, w);
  for (size_t i = 0; i < big->num_vertices(); ++i)
    if (const auto o = old_index(i)) {
      y.Gamma[i] = x.Gamma[*o];
      y.Delta[i] = x.Delta[*o];
    }
  for (size_t h = 0; h < big->num_arrows(); ++h) {
    const auto s = old_index(big->arrow(h).src), t = old_index(big->arrow(h).tgt);
    if (s && t) y.B[h] = x.B[arrow_between(q, *s, *t)];
  }
  return y;
}

SliceSpec padded_spec(const SliceSpec& spec) {
  SliceSpec s = spec;
  s.n = spec.n + 1;
  s.k = spec.k + 1;
  if (spec.v) {
    std::vector<size_t> v{0};
    v.insert(v.end(), spec.v->begin(), spec.v->end());
    v.push_back(0);
    s.v = v;
  }
  s.validate();
  return s;
}

bool params_agree_under_padding(const MaffeiParams& small, const MaffeiParams& padded) {
  if (small.regime != padded.regime || small.r != padded.r) return false;
  for (int e = 0; e <= 1; ++e)
    for (int f = 0; f <= 1; ++f) {
      const auto& a = small.family(e, f);
      const auto& b = padded.family(e, f);
      if (b.size() < a.size()) return false;
      for (size_t i = 0; i < b.size(); ++i)
        if (i < a.size() ? b[i] != a[i] : !b[i].is_zero()) return false;
    }
  return true;
}

FoldContext fold_context_for(const SliceSpec& spec, const std::vector<size_t>& v) {
  spec.validate();
  return make_type_a_fold_context(spec.n, v, small_w(spec),
                                  spec.k_equals_n() ? static_cast<size_t>(spec.w_plus) : 0);
}

}  // namespace qf
