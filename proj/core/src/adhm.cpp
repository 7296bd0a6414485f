#include "quiverfold/adhm.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

#include "linear_builder.hpp"
#include "quiverfold/linalg.hpp"

namespace qf {

using detail::LinearBuilder;

AdhmDatum AdhmDatum::zero(QuiverPtr q, std::vector<size_t> v, std::vector<size_t> w) {
  if (!q) throw std::invalid_argument("AdhmDatum: null quiver");
  if (v.size() != q->num_vertices() || w.size() != q->num_vertices())
    throw std::invalid_argument("AdhmDatum: dimension vectors do not match the quiver");
  AdhmDatum x;
  x.quiver = std::move(q);
  x.v = std::move(v);
  x.w = std::move(w);
  for (const auto& h : x.quiver->arrows()) x.B.emplace_back(x.v[h.tgt], x.v[h.src]);
  for (size_t i = 0; i < x.v.size(); ++i) {
    x.Gamma.emplace_back(x.v[i], x.w[i]);
    x.Delta.emplace_back(x.w[i], x.v[i]);
  }
  return x;
}

void AdhmDatum::check_shapes() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("AdhmDatum: " + what); };
  if (!quiver) fail("null quiver");
  const size_t n = quiver->num_vertices();
  if (v.size() != n || w.size() != n) fail("dimension vectors do not match the quiver");
  if (B.size() != quiver->num_arrows() || Gamma.size() != n || Delta.size() != n) fail("wrong number of maps");
  for (size_t h = 0; h < B.size(); ++h) {
    const auto& a = quiver->arrow(h);
    if (B[h].rows() != v[a.tgt] || B[h].cols() != v[a.src]) fail("B[" + a.id + "] has the wrong shape");
  }
  for (size_t i = 0; i < n; ++i) {
    if (Gamma[i].rows() != v[i] || Gamma[i].cols() != w[i])
      fail("Gamma[" + quiver->vertex_id(i) + "] has the wrong shape");
    if (Delta[i].rows() != w[i] || Delta[i].cols() != v[i])
      fail("Delta[" + quiver->vertex_id(i) + "] has the wrong shape");
  }
}

int AdhmDatum::field_order() const {
  int l = 1;
  for (const auto& m : B) l = std::lcm(l, m.field_order());
  for (const auto& m : Gamma) l = std::lcm(l, m.field_order());
  for (const auto& m : Delta) l = std::lcm(l, m.field_order());
  return l;
}

size_t AdhmDatum::total_v() const { return std::accumulate(v.begin(), v.end(), size_t{0}); }

GroupElement GroupElement::identity(GroupKind kind, const std::vector<size_t>& dims) {
  GroupElement g{kind, {}};
  for (size_t d : dims) g.blocks.push_back(Matrix::identity(d));
  return g;
}

GroupElement GroupElement::random(GroupKind kind, const std::vector<size_t>& dims, Rng& rng) {
  GroupElement g{kind, {}};
  for (size_t d : dims) g.blocks.push_back(rng.invertible_matrix(d));
  return g;
}

GroupElement GroupElement::inverse() const {
  GroupElement g{kind, {}};
  for (const auto& b : blocks) g.blocks.push_back(qf::inverse(b));
  return g;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.kind != b.kind || a.blocks.size() != b.blocks.size())
    throw std::invalid_argument("GroupElement: incompatible factors");
  GroupElement g{a.kind, {}};
  for (size_t i = 0; i < a.blocks.size(); ++i) g.blocks.push_back(a.blocks[i] * b.blocks[i]);
  return g;
}

bool GroupElement::is_identity() const {
  for (const auto& b : blocks)
    if (!b.is_identity()) return false;
  return true;
}

std::vector<Matrix> moment_residual(const AdhmDatum& x) {
  const Quiver& q = *x.quiver;
  std::vector<Matrix> r;
  for (size_t i = 0; i < q.num_vertices(); ++i) r.push_back(-(x.Gamma[i] * x.Delta[i]));
  for (size_t h : q.omega()) {
    const auto& a = q.arrow(h);
    r[a.src] += x.B[a.bar] * x.B[h];
    r[a.tgt] -= x.B[h] * x.B[a.bar];
  }
  return r;
}

bool in_lambda(const AdhmDatum& x) {
  for (const auto& m : moment_residual(x))
    if (!m.is_zero()) return false;
  return true;
}

bool is_stable(const AdhmDatum& x) {
  const Quiver& q = *x.quiver;
  const size_t n = q.num_vertices();
  std::vector<Matrix> span(n);
  std::vector<size_t> dim(n);
  for (size_t i = 0; i < n; ++i) {
    span[i] = column_basis(x.Gamma[i]);
    dim[i] = span[i].cols();
  }
  const size_t total = x.total_v();
  for (size_t step = 0; step <= total; ++step) {
    bool grew = false;
    std::vector<Matrix> next = span;
    for (size_t h = 0; h < q.num_arrows(); ++h) {
      const auto& a = q.arrow(h);
      if (span[a.src].cols() == 0) continue;
      next[a.tgt] = hstack({next[a.tgt], x.B[h] * span[a.src]});
    }
    for (size_t i = 0; i < n; ++i) {
      next[i] = column_basis(next[i]);
      if (next[i].cols() > dim[i]) grew = true;
      dim[i] = next[i].cols();
    }
    span = std::move(next);
    if (!grew) break;
  }
  for (size_t i = 0; i < n; ++i)
    if (dim[i] != x.v[i]) return false;
  return true;
}

bool is_b_nilpotent(const AdhmDatum& x) {
  const Quiver& q = *x.quiver;
  const size_t n = q.num_vertices();
  // K_i grows from 0: the vectors killed by every path of length <= m.
  std::vector<Matrix> ann(n);  // rows span the annihilator of K_i
  for (size_t i = 0; i < n; ++i) ann[i] = Matrix::identity(x.v[i]);
  const size_t total = x.total_v();
  for (size_t step = 0; step <= total + 1; ++step) {
    std::vector<Matrix> next(n);
    bool changed = false;
    for (size_t i = 0; i < n; ++i) {
      std::vector<Matrix> rows;
      rows.emplace_back(0, x.v[i]);
      for (size_t h = 0; h < q.num_arrows(); ++h)
        if (q.arrow(h).src == i) rows.push_back(ann[q.arrow(h).tgt] * x.B[h]);
      const Matrix k = kernel_basis(vstack(rows));
      next[i] = kernel_basis(k.transpose()).transpose();
      if (next[i].rows() != ann[i].rows()) changed = true;
    }
    ann = std::move(next);
    if (!changed) break;
  }
  for (size_t i = 0; i < n; ++i)
    if (ann[i].rows() != 0) return false;
  return true;
}

bool in_lagrangian(const AdhmDatum& x, bool dynkin_finite) {
  for (const auto& d : x.Delta)
    if (!d.is_zero()) return false;
  return dynkin_finite || is_b_nilpotent(x);
}

AdhmDatum act(const GroupElement& g, const AdhmDatum& x) {
  const Quiver& q = *x.quiver;
  AdhmDatum y = x;
  if (g.blocks.size() != q.num_vertices()) throw std::invalid_argument("act: wrong number of blocks");
  const auto gi = g.inverse();
  if (g.kind == GroupKind::V) {
    for (size_t h = 0; h < q.num_arrows(); ++h) {
      const auto& a = q.arrow(h);
      y.B[h] = g.blocks[a.tgt] * x.B[h] * gi.blocks[a.src];
    }
    for (size_t i = 0; i < q.num_vertices(); ++i) {
      y.Gamma[i] = g.blocks[i] * x.Gamma[i];
      y.Delta[i] = x.Delta[i] * gi.blocks[i];
    }
  } else {
    for (size_t i = 0; i < q.num_vertices(); ++i) {
      y.Gamma[i] = x.Gamma[i] * gi.blocks[i];
      y.Delta[i] = g.blocks[i] * x.Delta[i];
    }
  }
  return y;
}

namespace {

// Unique shortest path from a to b in the underlying graph, as a vertex list.
std::vector<size_t> geodesic(const Quiver& q, size_t a, size_t b) {
  const size_t n = q.num_vertices();
  constexpr size_t kInf = static_cast<size_t>(-1);
  std::vector<size_t> dist(n, kInf), ways(n, 0), prev(n, kInf);
  dist[a] = 0;
  ways[a] = 1;
  std::deque<size_t> queue{a};
  while (!queue.empty()) {
    const size_t u = queue.front();
    queue.pop_front();
    for (const auto& h : q.arrows()) {
      if (h.src != u) continue;
      const size_t t = h.tgt;
      if (dist[t] == kInf) {
        dist[t] = dist[u] + 1;
        prev[t] = u;
        queue.push_back(t);
      }
      if (dist[t] == dist[u] + 1) ways[t] = std::min<size_t>(ways[t] + ways[u], 2);
    }
  }
  if (dist[b] == kInf)
    throw std::invalid_argument("path_product: no path from " + q.vertex_id(a) + " to " + q.vertex_id(b));
  if (ways[b] > 1)
    throw std::invalid_argument("path_product: shortest path from " + q.vertex_id(a) + " to " +
                                q.vertex_id(b) + " is not unique");
  std::vector<size_t> path{b};
  while (path.back() != a) path.push_back(prev[path.back()]);
  return {path.rbegin(), path.rend()};
}

}  // namespace

Matrix path_product(const AdhmDatum& x, const std::vector<size_t>& waypoints) {
  const Quiver& q = *x.quiver;
  if (waypoints.empty()) throw std::invalid_argument("path_product: empty path");
  std::vector<size_t> full{waypoints.front()};
  for (size_t k = 1; k < waypoints.size(); ++k) {
    const auto seg = geodesic(q, waypoints[k - 1], waypoints[k]);
    full.insert(full.end(), seg.begin() + 1, seg.end());
  }
  Matrix p = Matrix::identity(x.v.at(full.front()));
  for (size_t k = 0; k + 1 < full.size(); ++k) {
    // B_{full[k], full[k+1]}: the arrow full[k+1] -> full[k].
    size_t found = q.num_arrows();
    for (size_t h = 0; h < q.num_arrows(); ++h)
      if (q.arrow(h).src == full[k + 1] && q.arrow(h).tgt == full[k]) found = h;
    p = p * x.B[found];
  }
  return p;
}

Matrix path_product(const AdhmDatum& x, const std::vector<std::string>& waypoints) {
  std::vector<size_t> idx;
  for (const auto& id : waypoints) idx.push_back(x.quiver->vertex_index(id));
  return path_product(x, idx);
}

SampleResult sample_point(QuiverPtr qp, const std::vector<size_t>& v, const std::vector<size_t>& w,
                          std::uint64_t seed, const SampleOptions& opts) {
  const Quiver& q = *qp;
  SampleResult result;
  const Rng root(seed);
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    result.attempts = attempt + 1;
    Rng rng = root.split(static_cast<std::uint64_t>(attempt));
    rng.set_range(opts.entry_lo, opts.entry_hi);
    AdhmDatum x = AdhmDatum::zero(qp, v, w);
    for (size_t h : q.omega()) x.B[h] = rng.matrix(v[q.arrow(h).tgt], v[q.arrow(h).src]);
    for (size_t i = 0; i < v.size(); ++i) x.Gamma[i] = rng.matrix(v[i], w[i]);

    LinearBuilder lb;
    std::vector<LinearBuilder::Block> back(q.num_arrows()), delta(v.size()), eq(v.size());
    for (size_t h : q.omega()) {
      const auto& a = q.arrow(h);
      back[a.bar] = lb.add_unknown(v[a.src], v[a.tgt]);
    }
    if (!opts.delta_zero)
      for (size_t i = 0; i < v.size(); ++i) delta[i] = lb.add_unknown(w[i], v[i]);
    for (size_t i = 0; i < v.size(); ++i) eq[i] = lb.add_equation(v[i], v[i]);
    for (size_t h : q.omega()) {
      const auto& a = q.arrow(h);
      lb.add_right(eq[a.src], back[a.bar], x.B[h], +1);
      lb.add_left(eq[a.tgt], x.B[h], back[a.bar], -1);
    }
    if (!opts.delta_zero)
      for (size_t i = 0; i < v.size(); ++i) lb.add_left(eq[i], x.Gamma[i], delta[i], -1);

    const Matrix k = kernel_basis(lb.matrix());
    Matrix sol(lb.unknowns(), 1);
    for (size_t c = 0; c < k.cols(); ++c) {
      const Scalar coef = rng.small_scalar();
      if (coef.is_zero()) continue;
      for (size_t r = 0; r < k.rows(); ++r)
        if (!k(r, c).is_zero()) sol(r, 0) += coef * k(r, c);
    }
    for (size_t h : q.omega()) x.B[q.arrow(h).bar] = LinearBuilder::unpack(sol, back[q.arrow(h).bar]);
    if (!opts.delta_zero)
      for (size_t i = 0; i < v.size(); ++i) x.Delta[i] = LinearBuilder::unpack(sol, delta[i]);

    if (!in_lambda(x)) throw std::logic_error("sample_point: solved datum violates the moment relations");
    if (opts.require_stable && !is_stable(x)) continue;
    result.datum = std::move(x);
    return result;
  }
  result.diagnostic = "no stable point found after " + std::to_string(opts.max_attempts) + " attempts";
  return result;
}

std::optional<GroupElement> transporter(const AdhmDatum& from, const AdhmDatum& to) {
  if (from.v != to.v || from.w != to.w) return std::nullopt;
  const Quiver& q = *from.quiver;
  const auto& v = from.v;
  LinearBuilder lb;
  std::vector<LinearBuilder::Block> g;
  for (size_t i = 0; i < v.size(); ++i) g.push_back(lb.add_unknown(v[i], v[i]));
  for (size_t h = 0; h < q.num_arrows(); ++h) {
    const auto& a = q.arrow(h);
    // g_t from.B = to.B g_s
    const auto e = lb.add_equation(v[a.tgt], v[a.src]);
    lb.add_right(e, g[a.tgt], from.B[h], +1);
    lb.add_left(e, to.B[h], g[a.src], -1);
  }
  for (size_t i = 0; i < v.size(); ++i) {
    const auto eg = lb.add_equation(v[i], from.w[i]);
    lb.add_right(eg, g[i], from.Gamma[i], +1);
    lb.set_rhs(eg, to.Gamma[i]);
    const auto ed = lb.add_equation(from.w[i], v[i]);
    lb.add_left(ed, to.Delta[i], g[i], +1);
    lb.set_rhs(ed, from.Delta[i]);
  }
  const auto sol = solve_linear(lb.matrix(), lb.rhs());
  if (!sol || sol->kernel.cols() != 0) return std::nullopt;
  GroupElement out{GroupKind::V, {}};
  for (size_t i = 0; i < v.size(); ++i) {
    Matrix b = LinearBuilder::unpack(sol->particular, g[i]);
    if (rank(b) != v[i]) return std::nullopt;
    out.blocks.push_back(std::move(b));
  }
  return out;
}

size_t dim_gv(const std::vector<size_t>& v) {
  size_t d = 0;
  for (size_t x : v) d += x * x;
  return d;
}

size_t tangent_dimension(const AdhmDatum& x) {
  const Quiver& q = *x.quiver;
  const auto& v = x.v;
  const auto& w = x.w;
  LinearBuilder lb;
  std::vector<LinearBuilder::Block> b(q.num_arrows()), gam(v.size()), del(v.size()), eq(v.size());
  for (size_t h = 0; h < q.num_arrows(); ++h) b[h] = lb.add_unknown(v[q.arrow(h).tgt], v[q.arrow(h).src]);
  for (size_t i = 0; i < v.size(); ++i) {
    gam[i] = lb.add_unknown(v[i], w[i]);
    del[i] = lb.add_unknown(w[i], v[i]);
  }
  for (size_t i = 0; i < v.size(); ++i) eq[i] = lb.add_equation(v[i], v[i]);
  for (size_t h : q.omega()) {
    const auto& a = q.arrow(h);
    // d(B_hbar B_h) at s, d(B_h B_hbar) at t
    lb.add_right(eq[a.src], b[a.bar], x.B[h], +1);
    lb.add_left(eq[a.src], x.B[a.bar], b[h], +1);
    lb.add_right(eq[a.tgt], b[h], x.B[a.bar], -1);
    lb.add_left(eq[a.tgt], x.B[h], b[a.bar], -1);
  }
  for (size_t i = 0; i < v.size(); ++i) {
    lb.add_right(eq[i], gam[i], x.Delta[i], -1);
    lb.add_left(eq[i], x.Gamma[i], del[i], -1);
  }
  return lb.unknowns() - rank(lb.matrix());
}

}  // namespace qf
