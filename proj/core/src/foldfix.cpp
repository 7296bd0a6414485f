#include "quiverfold/foldfix.hpp"

#include <functional>
#include <stdexcept>

#include "quiverfold/fixtures.hpp"
#include "quiverfold/linalg.hpp"

namespace qf {

namespace {

std::vector<size_t> inverse_perm(const std::vector<size_t>& p) {
  std::vector<size_t> inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

// maps[i] : X_i -> X_a(i); returns maps[a^{d-1}(i)] ... maps[a(i)] maps[i].
Matrix orbit_composite(const AdmAut& a, const std::vector<Matrix>& maps, size_t i) {
  Matrix c = Matrix::identity(maps[i].cols());
  size_t cur = i;
  for (int k = 0; k < a.d_vertex[i]; ++k) {
    c = maps[cur] * c;
    cur = a.vperm[cur];
  }
  return c;
}

std::vector<size_t> offsets(const std::vector<size_t>& sizes) {
  std::vector<size_t> off{0};
  for (size_t s : sizes) off.push_back(off.back() + s);
  return off;
}

// Split-vertex sizes belonging to representative r.
std::vector<size_t> rep_sizes(const FoldContext& ctx, const std::vector<size_t>& by_split, size_t r) {
  const int e = ctx.aut.e_vertex[ctx.sq.reps[r]];
  std::vector<size_t> out;
  for (int j = 0; j < e; ++j) out.push_back(by_split.at(ctx.sq.split_vertex(r, j)));
  return out;
}

// g_a(i) phi_i : V_i -> V_a(i) for every i, and inverses.
struct Transport {
  std::vector<Matrix> m, minv;
};

Transport transport(const FoldContext& ctx, const GroupElement& g) {
  Transport t;
  for (size_t i = 0; i < ctx.v.size(); ++i) {
    t.m.push_back(g.blocks[ctx.aut.vperm[i]] * ctx.phi[i]);
    t.minv.push_back(inverse(t.m.back()));
  }
  return t;
}

// g_{a^f(t)} phi_{a^{f-1}(t)} ... g_{a(t)} phi_t : V_t -> V_{a^f(t)}.
Matrix chain_prefix(const FoldContext& ctx, const Transport& tr, size_t t, int f) {
  Matrix p = Matrix::identity(ctx.v[t]);
  size_t cur = t;
  for (int k = 0; k < f; ++k) {
    p = tr.m[cur] * p;
    cur = ctx.aut.vperm[cur];
  }
  return p;
}

}  // namespace

Scalar FoldContext::zeta(size_t rep, int j) const {
  return Scalar::root_of_unity(aut.period, static_cast<long>(aut.d_vertex[sq.reps[rep]]) * j);
}

std::vector<size_t> FoldContext::w_tilde() const {
  std::vector<size_t> out(sq.vinfo.size());
  for (size_t k = 0; k < sq.vinfo.size(); ++k) out[k] = w_split[sq.vinfo[k].rep][static_cast<size_t>(sq.vinfo[k].j)];
  return out;
}

FoldContext make_fold_context(QuiverPtr q, const AdmAut& a, std::vector<size_t> v, std::vector<size_t> w,
                              std::optional<std::vector<Matrix>> phi, std::optional<std::vector<Matrix>> sigma) {
  const auto bad = validate(*q, a);
  if (!bad.empty()) throw std::invalid_argument("fold context: " + bad.front());
  const size_t n = q->num_vertices();
  if (v.size() != n || w.size() != n) throw std::invalid_argument("fold context: dimension vectors do not match");
  for (size_t i = 0; i < n; ++i)
    if (v[i] != v[a.vperm[i]] || w[i] != w[a.vperm[i]])
      throw std::invalid_argument("fold context: dimensions must be constant on orbits");
  FoldContext c;
  c.quiver = q;
  c.aut = a;
  c.sq = split_quotient(*q, a);
  c.split_quiver = std::make_shared<const Quiver>(c.sq.split);
  c.v = std::move(v);
  c.w = std::move(w);
  if (phi) {
    c.phi = std::move(*phi);
  } else {
    for (size_t i = 0; i < n; ++i) c.phi.push_back(Matrix::identity(c.v[i]));
  }
  if (sigma) {
    c.sigma = std::move(*sigma);
  } else {
    for (size_t i = 0; i < n; ++i) c.sigma.push_back(Matrix::identity(c.w[i]));
  }
  if (c.phi.size() != n || c.sigma.size() != n) throw std::invalid_argument("fold context: need one phi and sigma per vertex");
  for (size_t i = 0; i < n; ++i) {
    if (c.phi[i].rows() != c.v[i] || c.phi[i].cols() != c.v[i] || rank(c.phi[i]) != c.v[i])
      throw std::invalid_argument("fold context: phi_" + q->vertex_id(i) + " is not an isomorphism");
    if (c.sigma[i].rows() != c.w[i] || c.sigma[i].cols() != c.w[i] || rank(c.sigma[i]) != c.w[i])
      throw std::invalid_argument("fold context: sigma_" + q->vertex_id(i) + " is not an isomorphism");
    if (!orbit_composite(a, c.phi, i).is_identity())
      throw std::invalid_argument("fold context: phi composite around the orbit of " + q->vertex_id(i) +
                                  " is not the identity");
    const Matrix s = orbit_composite(a, c.sigma, i);
    if (!s.pow(static_cast<unsigned>(a.e_vertex[i])).is_identity())
      throw std::invalid_argument("fold context: sigma composite at " + q->vertex_id(i) +
                                  " does not have order dividing e_i");
  }
  for (size_t r = 0; r < c.sq.reps.size(); ++r) {
    const size_t i = c.sq.reps[r];
    const Matrix s = orbit_composite(a, c.sigma, i);
    std::vector<Matrix> cols;
    std::vector<size_t> dims;
    for (int j = 0; j < a.e_vertex[i]; ++j) {
      cols.push_back(eigenspace(s, c.zeta(r, j)));
      dims.push_back(cols.back().cols());
    }
    Matrix p = cols.empty() ? Matrix(c.w[i], 0) : hstack(cols);
    if (p.cols() != c.w[i])
      throw std::invalid_argument("fold context: sigma composite at " + q->vertex_id(i) + " is not diagonalizable");
    c.eigenbasis.push_back(std::move(p));
    c.w_split.push_back(std::move(dims));
  }
  c.omega1 = edge_orbit_reps(*q, a);
  return c;
}

FoldContext make_type_a_fold_context(int n, std::vector<size_t> v, std::vector<size_t> w, size_t w_plus,
                                     std::optional<Matrix> sigma_n) {
  auto f = a_involution(n);
  const auto q = std::make_shared<const Quiver>(f.quiver);
  const size_t mid = q->vertex_index(std::to_string(n));
  if (w.size() != q->num_vertices()) throw std::invalid_argument("fold context: w has the wrong length");
  if (w_plus > w[mid]) throw std::invalid_argument("fold context: w_plus exceeds w_n");
  std::vector<Matrix> sigma;
  for (size_t i = 0; i < q->num_vertices(); ++i) sigma.push_back(Matrix::identity(w[i]));
  if (sigma_n) {
    sigma[mid] = *sigma_n;
  } else {
    for (size_t k = w_plus; k < w[mid]; ++k) sigma[mid](k, k) = -1;
  }
  return make_fold_context(q, f.aut, std::move(v), std::move(w), std::nullopt, std::move(sigma));
}

std::vector<Decomposition> enumerate_decompositions(const FoldContext& ctx) {
  std::vector<Decomposition> out;
  std::vector<size_t> cur(ctx.sq.vinfo.size(), 0);
  // Lexicographic over split vertices; each representative's parts sum to v_i.
  std::function<void(size_t)> rec;
  rec = [&](size_t r) {
    if (r == ctx.sq.reps.size()) {
      out.push_back({cur});
      return;
    }
    const size_t i = ctx.sq.reps[r];
    const int e = ctx.aut.e_vertex[i];
    std::function<void(int, size_t)> parts = [&](int j, size_t left) {
      const size_t k = ctx.sq.split_vertex(r, j);
      if (j == e - 1) {
        cur[k] = left;
        rec(r + 1);
        return;
      }
      for (size_t x = 0; x <= left; ++x) {
        cur[k] = x;
        parts(j + 1, left - x);
      }
    };
    parts(0, ctx.v[i]);
  };
  rec(0);
  return out;
}

AdhmDatum theta(const FoldContext& ctx, const AdhmDatum& x) {
  const Quiver& q = *ctx.quiver;
  const auto vinv = inverse_perm(ctx.aut.vperm);
  const auto ainv = inverse_perm(ctx.aut.aperm);
  AdhmDatum y = x;
  for (size_t h = 0; h < q.num_arrows(); ++h) {
    const size_t g = ainv[h];
    const auto& a = q.arrow(g);
    y.B[h] = ctx.phi[a.tgt] * x.B[g] * inverse(ctx.phi[a.src]);
  }
  for (size_t i = 0; i < q.num_vertices(); ++i) {
    const size_t j = vinv[i];
    y.Gamma[i] = ctx.phi[j] * x.Gamma[j] * inverse(ctx.sigma[j]);
    y.Delta[i] = ctx.sigma[j] * x.Delta[j] * inverse(ctx.phi[j]);
  }
  return y;
}

GroupElement theta(const FoldContext& ctx, const GroupElement& g) {
  const auto vinv = inverse_perm(ctx.aut.vperm);
  const auto& conj = g.kind == GroupKind::V ? ctx.phi : ctx.sigma;
  GroupElement out{g.kind, {}};
  for (size_t i = 0; i < g.blocks.size(); ++i) {
    const size_t j = vinv[i];
    out.blocks.push_back(conj[j] * g.blocks[j] * inverse(conj[j]));
  }
  return out;
}

GroupElement g_tilde(const FoldContext& ctx, const Decomposition& d) {
  GroupElement g = GroupElement::identity(GroupKind::V, ctx.v);
  for (size_t r = 0; r < ctx.sq.reps.size(); ++r) {
    std::vector<Scalar> diag;
    const auto sizes = rep_sizes(ctx, d.vt, r);
    for (size_t j = 0; j < sizes.size(); ++j)
      for (size_t k = 0; k < sizes[j]; ++k) diag.push_back(ctx.zeta(r, static_cast<int>(j)));
    g.blocks[ctx.sq.reps[r]] = Matrix::diagonal(diag);
  }
  return g;
}

namespace {

void check_decomposition(const FoldContext& ctx, const Decomposition& d) {
  if (d.vt.size() != ctx.sq.vinfo.size()) throw std::invalid_argument("decomposition has the wrong length");
  for (size_t r = 0; r < ctx.sq.reps.size(); ++r) {
    size_t s = 0;
    for (size_t x : rep_sizes(ctx, d.vt, r)) s += x;
    if (s != ctx.v[ctx.sq.reps[r]]) throw std::invalid_argument("decomposition does not sum to v");
  }
}

}  // namespace

AdhmDatum psi_embed(const FoldContext& ctx, const Decomposition& d, const AdhmDatum& y) {
  check_decomposition(ctx, d);
  if (y.v != d.vt || y.w != ctx.w_tilde())
    throw std::invalid_argument("psi_embed: datum dimensions do not match the decomposition");
  const Quiver& q = *ctx.quiver;
  const AdmAut& a = ctx.aut;
  const auto& sq = ctx.sq;
  AdhmDatum x = AdhmDatum::zero(ctx.quiver, ctx.v, ctx.w);
  const Transport tr = transport(ctx, g_tilde(ctx, d));

  for (size_t r = 0; r < sq.reps.size(); ++r) {
    const size_t i = sq.reps[r];
    const int e = a.e_vertex[i];
    std::vector<Matrix> gam, del;
    for (int j = 0; j < e; ++j) {
      gam.push_back(y.Gamma[sq.split_vertex(r, j)]);
      del.push_back(y.Delta[sq.split_vertex(r, j)]);
    }
    x.Gamma[i] = Scalar(e) * block_diag(gam) * inverse(ctx.eigenbasis[r]);
    x.Delta[i] = ctx.eigenbasis[r] * block_diag(del);
    size_t cur = i;
    for (int k = 1; k < a.d_vertex[i]; ++k) {
      const size_t nxt = a.vperm[cur];
      x.Gamma[nxt] = tr.m[cur] * x.Gamma[cur] * inverse(ctx.sigma[cur]);
      x.Delta[nxt] = ctx.sigma[cur] * x.Delta[cur] * tr.minv[cur];
      cur = nxt;
    }
  }

  for (const auto& [h1, f] : ctx.omega1) {
    const Arrow& arr = q.arrow(h1);
    const size_t o = sq.arrow_orbit_of[h1], ob = sq.arrow_orbit_of[arr.bar];
    const size_t rs = sq.rep_of[arr.src], rt = sq.rep_of[arr.tgt];
    const size_t s_hat = sq.reps[rs], t_hat = sq.reps[rt];
    const auto vs = offsets(rep_sizes(ctx, d.vt, rs)), vt = offsets(rep_sizes(ctx, d.vt, rt));
    Matrix fwd(ctx.v[t_hat], ctx.v[s_hat]), bwd(ctx.v[s_hat], ctx.v[t_hat]);
    for (int js = 0; js < a.e_vertex[s_hat]; ++js)
      for (int jt = 0; jt < a.e_vertex[t_hat]; ++jt) {
        const auto it = sq.arrow_lookup.find({o, js, jt});
        if (it == sq.arrow_lookup.end()) continue;
        fwd.set_block(vt[static_cast<size_t>(jt)], vs[static_cast<size_t>(js)], y.B[it->second]);
        bwd.set_block(vs[static_cast<size_t>(js)], vt[static_cast<size_t>(jt)], y.B[sq.arrow_lookup.at({ob, jt, js})]);
      }
    const Matrix prefix = chain_prefix(ctx, tr, t_hat, f);
    x.B[h1] = Scalar(a.e_arrow[h1]) * prefix * fwd;
    x.B[arr.bar] = bwd * inverse(prefix);
    for (size_t start : {h1, arr.bar}) {
      size_t cur = start;
      for (int k = 1; k < a.d_arrow[start]; ++k) {
        const size_t nxt = a.aperm[cur];
        const Arrow& c = q.arrow(cur);
        x.B[nxt] = tr.m[c.tgt] * x.B[cur] * tr.minv[c.src];
        cur = nxt;
      }
    }
  }
  return x;
}

GroupElement rho_v(const FoldContext& ctx, const Decomposition& d, const GroupElement& h) {
  check_decomposition(ctx, d);
  const Transport tr = transport(ctx, g_tilde(ctx, d));
  GroupElement out = GroupElement::identity(GroupKind::V, ctx.v);
  for (size_t r = 0; r < ctx.sq.reps.size(); ++r) {
    const size_t i = ctx.sq.reps[r];
    std::vector<Matrix> parts;
    for (int j = 0; j < ctx.aut.e_vertex[i]; ++j) parts.push_back(h.blocks.at(ctx.sq.split_vertex(r, j)));
    out.blocks[i] = block_diag(parts);
    size_t cur = i;
    for (int k = 1; k < ctx.aut.d_vertex[i]; ++k) {
      const size_t nxt = ctx.aut.vperm[cur];
      out.blocks[nxt] = tr.m[cur] * out.blocks[cur] * tr.minv[cur];
      cur = nxt;
    }
  }
  return out;
}

GroupElement rho_w_inverse(const FoldContext& ctx, const GroupElement& alpha) {
  GroupElement out = GroupElement::identity(GroupKind::W, ctx.w);
  for (size_t r = 0; r < ctx.sq.reps.size(); ++r) {
    const size_t i = ctx.sq.reps[r];
    std::vector<Matrix> parts;
    for (int j = 0; j < ctx.aut.e_vertex[i]; ++j) parts.push_back(alpha.blocks.at(ctx.sq.split_vertex(r, j)));
    out.blocks[i] = ctx.eigenbasis[r] * block_diag(parts) * inverse(ctx.eigenbasis[r]);
    size_t cur = i;
    for (int k = 1; k < ctx.aut.d_vertex[i]; ++k) {
      const size_t nxt = ctx.aut.vperm[cur];
      out.blocks[nxt] = ctx.sigma[cur] * out.blocks[cur] * inverse(ctx.sigma[cur]);
      cur = nxt;
    }
  }
  return out;
}

std::optional<FixedPoint> classify_fixed(const FoldContext& ctx, const AdhmDatum& x) {
  const auto g = transporter(theta(ctx, x), x);
  if (!g) return std::nullopt;
  const AdmAut& a = ctx.aut;
  const auto& sq = ctx.sq;
  FixedPoint fp;
  fp.g = *g;
  fp.h = GroupElement::identity(GroupKind::V, ctx.v);
  fp.d.vt.assign(sq.vinfo.size(), 0);

  for (size_t r = 0; r < sq.reps.size(); ++r) {
    const size_t i = sq.reps[r];
    // tau_i = g_i phi_{a^{d-1} i} ... g_{a(i)} phi_i
    Matrix tau = Matrix::identity(ctx.v[i]);
    size_t cur = i;
    for (int k = 0; k < a.d_vertex[i]; ++k) {
      tau = g->blocks[a.vperm[cur]] * ctx.phi[cur] * tau;
      cur = a.vperm[cur];
    }
    std::vector<Matrix> spaces;
    for (int j = 0; j < a.e_vertex[i]; ++j) {
      spaces.push_back(eigenspace(tau, ctx.zeta(r, j)));
      fp.d.vt[sq.split_vertex(r, j)] = spaces.back().cols();
    }
    const Matrix basis = spaces.empty() ? Matrix(ctx.v[i], 0) : hstack(spaces);
    if (basis.cols() != ctx.v[i]) return std::nullopt;  // tau^e != id, so x was not stable
    fp.h.blocks[i] = inverse(basis);
    cur = i;
    for (int k = 1; k < a.d_vertex[i]; ++k) {
      const size_t nxt = a.vperm[cur];
      fp.h.blocks[nxt] = ctx.phi[cur] * fp.h.blocks[cur] * inverse(ctx.phi[cur]) * inverse(g->blocks[nxt]);
      cur = nxt;
    }
  }
  fp.normalized = act(fp.h, x);
  const AdhmDatum& xn = fp.normalized;

  AdhmDatum y = AdhmDatum::zero(ctx.split_quiver, fp.d.vt, ctx.w_tilde());
  const Transport tr = transport(ctx, g_tilde(ctx, fp.d));
  for (size_t r = 0; r < sq.reps.size(); ++r) {
    const size_t i = sq.reps[r];
    const auto vo = offsets(rep_sizes(ctx, fp.d.vt, r));
    const auto wo = offsets(ctx.w_split[r]);
    const Scalar e(a.e_vertex[i]);
    const Matrix gam = xn.Gamma[i] * ctx.eigenbasis[r] * e.inverse();
    const Matrix del = inverse(ctx.eigenbasis[r]) * xn.Delta[i];
    for (int j = 0; j < a.e_vertex[i]; ++j) {
      const size_t k = sq.split_vertex(r, j), ju = static_cast<size_t>(j);
      y.Gamma[k] = gam.block(vo[ju], wo[ju], vo[ju + 1] - vo[ju], wo[ju + 1] - wo[ju]);
      y.Delta[k] = del.block(wo[ju], vo[ju], wo[ju + 1] - wo[ju], vo[ju + 1] - vo[ju]);
    }
  }
  const Quiver& q = *ctx.quiver;
  for (const auto& [h1, f] : ctx.omega1) {
    const Arrow& arr = q.arrow(h1);
    const size_t o = sq.arrow_orbit_of[h1], ob = sq.arrow_orbit_of[arr.bar];
    const size_t rs = sq.rep_of[arr.src], rt = sq.rep_of[arr.tgt];
    const size_t s_hat = sq.reps[rs], t_hat = sq.reps[rt];
    const auto vs = offsets(rep_sizes(ctx, fp.d.vt, rs)), vt = offsets(rep_sizes(ctx, fp.d.vt, rt));
    const Matrix prefix = chain_prefix(ctx, tr, t_hat, f);
    const Matrix fwd = inverse(prefix) * xn.B[h1] * Scalar(a.e_arrow[h1]).inverse();
    const Matrix bwd = xn.B[arr.bar] * prefix;
    for (int js = 0; js < a.e_vertex[s_hat]; ++js)
      for (int jt = 0; jt < a.e_vertex[t_hat]; ++jt) {
        const auto it = sq.arrow_lookup.find({o, js, jt});
        if (it == sq.arrow_lookup.end()) continue;
        const size_t s0 = vs[static_cast<size_t>(js)], s1 = vs[static_cast<size_t>(js) + 1];
        const size_t t0 = vt[static_cast<size_t>(jt)], t1 = vt[static_cast<size_t>(jt) + 1];
        y.B[it->second] = fwd.block(t0, s0, t1 - t0, s1 - s0);
        y.B[sq.arrow_lookup.at({ob, jt, js})] = bwd.block(s0, t0, s1 - s0, t1 - t0);
      }
  }
  if (psi_embed(ctx, fp.d, y) != xn)
    throw std::logic_error("classify_fixed: normalized representative is not in the image of psi");
  fp.preimage = std::move(y);
  return fp;
}

std::optional<Scalar> is_theta_similitude(const FoldContext& ctx, const GroupElement& alpha) {
  if (alpha.kind != GroupKind::W) throw std::invalid_argument("is_theta_similitude: expected an element of G_W");
  const GroupElement t = theta(ctx, alpha);
  std::optional<Scalar> lambda;
  for (size_t i = 0; i < alpha.blocks.size() && !lambda; ++i)
    for (size_t k = 0; k < alpha.blocks[i].entries().size() && !lambda; ++k)
      if (!alpha.blocks[i].entries()[k].is_zero())
        lambda = t.blocks[i].entries()[k] / alpha.blocks[i].entries()[k];
  if (!lambda) lambda = Scalar(1);
  for (size_t i = 0; i < alpha.blocks.size(); ++i)
    if (t.blocks[i] != alpha.blocks[i] * *lambda) return std::nullopt;
  return lambda;
}

Decomposition component_permutation(const FoldContext& ctx, const Scalar& lambda, const Decomposition& d) {
  check_decomposition(ctx, d);
  Decomposition out = d;
  for (size_t r = 0; r < ctx.sq.reps.size(); ++r) {
    const size_t i = ctx.sq.reps[r];
    const int e = ctx.aut.e_vertex[i];
    const Scalar shift = lambda.pow(-static_cast<long>(ctx.aut.d_vertex[i]));
    for (int j = 0; j < e; ++j) {
      const Scalar target = ctx.zeta(r, j) * shift;
      int src = -1;
      for (int jj = 0; jj < e; ++jj)
        if (ctx.zeta(r, jj) == target) src = jj;
      if (src < 0) throw std::invalid_argument("component_permutation: lambda^{d_i} is not an e_i-th root of unity");
      out.vt[ctx.sq.split_vertex(r, j)] = d.vt[ctx.sq.split_vertex(r, src)];
    }
  }
  return out;
}

SampleResult sample_split_point(const FoldContext& ctx, const Decomposition& d, std::uint64_t seed,
                                const SampleOptions& opts) {
  check_decomposition(ctx, d);
  return sample_point(ctx.split_quiver, d.vt, ctx.w_tilde(), seed, opts);
}

}  // namespace qf
