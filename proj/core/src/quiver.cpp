#include "quiverfold/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "quiverfold/linalg.hpp"

namespace qf {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows,
               const std::vector<std::string>& orientation)
    : vertices_(std::move(vertices)) {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (!vmap_.emplace(vertices_[i], i).second)
      throw std::invalid_argument("quiver: duplicate vertex id '" + vertices_[i] + "'");
  for (size_t h = 0; h < arrows.size(); ++h)
    if (!amap_.emplace(arrows[h].id, h).second)
      throw std::invalid_argument("quiver: duplicate arrow id '" + arrows[h].id + "'");
  arrows_.reserve(arrows.size());
  for (const auto& s : arrows) {
    auto lookup = [](const auto& m, const std::string& id, const char* what) {
      auto it = m.find(id);
      if (it == m.end()) throw std::invalid_argument(std::string("quiver: unknown ") + what + " '" + id + "'");
      return it->second;
    };
    arrows_.push_back(Arrow{s.id, lookup(vmap_, s.src, "vertex"), lookup(vmap_, s.tgt, "vertex"),
                            lookup(amap_, s.bar, "arrow"), false});
  }
  for (const auto& id : orientation) arrows_.at(arrow_index(id)).in_omega = true;
}

Quiver Quiver::from_edges(std::vector<std::string> vertices,
                          const std::vector<std::pair<std::string, std::string>>& oriented_edges) {
  std::vector<ArrowSpec> arrows;
  std::vector<std::string> omega;
  for (const auto& [s, t] : oriented_edges) {
    const std::string fwd = s + "->" + t, bwd = t + "->" + s;
    arrows.push_back({fwd, s, t, bwd});
    arrows.push_back({bwd, t, s, fwd});
    omega.push_back(fwd);
  }
  return Quiver(std::move(vertices), arrows, omega);
}

size_t Quiver::vertex_index(const std::string& id) const {
  auto it = vmap_.find(id);
  if (it == vmap_.end()) throw std::invalid_argument("quiver: unknown vertex '" + id + "'");
  return it->second;
}

size_t Quiver::arrow_index(const std::string& id) const {
  auto it = amap_.find(id);
  if (it == amap_.end()) throw std::invalid_argument("quiver: unknown arrow '" + id + "'");
  return it->second;
}

std::vector<size_t> Quiver::omega() const {
  std::vector<size_t> o;
  for (size_t h = 0; h < arrows_.size(); ++h)
    if (arrows_[h].in_omega) o.push_back(h);
  return o;
}

std::vector<std::string> Quiver::violations() const {
  std::vector<std::string> out;
  bool bar_ok = true, ends_ok = true, loops = false, half_ok = true;
  for (size_t h = 0; h < arrows_.size(); ++h) {
    const Arrow& a = arrows_[h];
    const Arrow& b = arrows_[a.bar];
    if (a.bar == h || b.bar != h) bar_ok = false;
    if (b.src != a.tgt || b.tgt != a.src) ends_ok = false;
    if (a.src == a.tgt) loops = true;
    if (a.bar != h && a.in_omega == b.in_omega) half_ok = false;
  }
  if (!bar_ok) out.emplace_back("bar is not a fixed-point-free involution");
  if (!ends_ok) out.emplace_back("bar does not reverse endpoints");
  if (loops) out.emplace_back("edge loop");
  if (!half_ok) out.emplace_back("orientation is not a half of the arrows");

  // Kahn's algorithm on Omega.
  std::vector<int> indeg(vertices_.size(), 0);
  for (const auto& a : arrows_)
    if (a.in_omega) ++indeg[a.tgt];
  std::vector<size_t> ready;
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (indeg[i] == 0) ready.push_back(i);
  size_t seen = 0;
  while (!ready.empty()) {
    const size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows_)
      if (a.in_omega && a.src == v && --indeg[a.tgt] == 0) ready.push_back(a.tgt);
  }
  if (seen != vertices_.size()) out.emplace_back("oriented cycle in orientation");
  return out;
}

size_t AdmAut::apply_vertex(size_t i, long k) const {
  const long d = d_vertex.at(i);
  long m = ((k % d) + d) % d;
  while (m--) i = vperm[i];
  return i;
}

size_t AdmAut::apply_arrow(size_t h, long k) const {
  const long d = d_arrow.at(h);
  long m = ((k % d) + d) % d;
  while (m--) h = aperm[h];
  return h;
}

namespace {

bool is_bijection(const std::vector<size_t>& p) {
  std::vector<bool> hit(p.size(), false);
  for (size_t x : p) {
    if (x >= p.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

std::vector<int> orbit_sizes(const std::vector<size_t>& p) {
  std::vector<int> d(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    int n = 1;
    for (size_t j = p[i]; j != i; j = p[j]) ++n;
    d[i] = n;
  }
  return d;
}

}  // namespace

AdmAut make_aut(const Quiver& q, std::vector<size_t> vperm, std::vector<size_t> aperm, int period) {
  if (vperm.size() != q.num_vertices() || !is_bijection(vperm))
    throw std::invalid_argument("automorphism: vertex_perm is not a bijection of the vertices");
  if (aperm.size() != q.num_arrows() || !is_bijection(aperm))
    throw std::invalid_argument("automorphism: arrow_perm is not a bijection of the arrows");
  if (period < 1) throw std::invalid_argument("automorphism: period must be positive");
  AdmAut a;
  a.vperm = std::move(vperm);
  a.aperm = std::move(aperm);
  a.period = period;
  a.d_vertex = orbit_sizes(a.vperm);
  a.d_arrow = orbit_sizes(a.aperm);
  for (int d : a.d_vertex) a.e_vertex.push_back(period % d == 0 ? period / d : 0);
  for (int d : a.d_arrow) a.e_arrow.push_back(period % d == 0 ? period / d : 0);
  return a;
}

AdmAut make_aut(const Quiver& q, const std::map<std::string, std::string>& vertex_perm,
                const std::map<std::string, std::string>& arrow_perm, int period) {
  std::vector<size_t> vp(q.num_vertices()), ap(q.num_arrows());
  std::iota(vp.begin(), vp.end(), 0);
  std::iota(ap.begin(), ap.end(), 0);
  for (const auto& [k, v] : vertex_perm) vp[q.vertex_index(k)] = q.vertex_index(v);
  for (const auto& [k, v] : arrow_perm) ap[q.arrow_index(k)] = q.arrow_index(v);
  return make_aut(q, std::move(vp), std::move(ap), period);
}

AdmAut make_aut_from_vertices(const Quiver& q, const std::map<std::string, std::string>& vertex_perm,
                              int period) {
  std::vector<size_t> vp(q.num_vertices());
  std::iota(vp.begin(), vp.end(), 0);
  for (const auto& [k, v] : vertex_perm) vp[q.vertex_index(k)] = q.vertex_index(v);
  std::map<std::pair<size_t, size_t>, size_t> by_ends;
  for (size_t h = 0; h < q.num_arrows(); ++h) {
    const auto key = std::make_pair(q.arrow(h).src, q.arrow(h).tgt);
    if (!by_ends.emplace(key, h).second)
      throw std::invalid_argument("automorphism: parallel arrows, give arrow_perm explicitly");
  }
  std::vector<size_t> ap(q.num_arrows());
  for (size_t h = 0; h < q.num_arrows(); ++h) {
    auto it = by_ends.find({vp[q.arrow(h).src], vp[q.arrow(h).tgt]});
    if (it == by_ends.end())
      throw std::invalid_argument("automorphism: vertex_perm does not map arrows to arrows");
    ap[h] = it->second;
  }
  return make_aut(q, std::move(vp), std::move(ap), period);
}

AdmAut identity_aut(const Quiver& q, int period) {
  std::vector<size_t> vp(q.num_vertices()), ap(q.num_arrows());
  std::iota(vp.begin(), vp.end(), 0);
  std::iota(ap.begin(), ap.end(), 0);
  return make_aut(q, std::move(vp), std::move(ap), period);
}

std::vector<std::string> validate(const Quiver& q, const AdmAut& a) {
  std::vector<std::string> out = q.violations();
  if (a.vperm.size() != q.num_vertices() || a.aperm.size() != q.num_arrows()) {
    out.emplace_back("automorphism has the wrong size");
    return out;
  }
  bool src_ok = true, tgt_ok = true, bar_ok = true, omega_ok = true;
  for (size_t h = 0; h < q.num_arrows(); ++h) {
    const Arrow& x = q.arrow(h);
    const Arrow& y = q.arrow(a.aperm[h]);
    if (y.src != a.vperm[x.src]) src_ok = false;
    if (y.tgt != a.vperm[x.tgt]) tgt_ok = false;
    if (a.aperm[x.bar] != y.bar) bar_ok = false;
    if (x.in_omega != y.in_omega) omega_ok = false;
  }
  if (!src_ok) out.emplace_back("automorphism does not commute with source");
  if (!tgt_ok) out.emplace_back("automorphism does not commute with target");
  if (!bar_ok) out.emplace_back("automorphism does not commute with bar");
  if (!omega_ok) out.emplace_back("automorphism does not preserve orientation");
  for (const auto& x : q.arrows()) {
    // src and tgt in the same orbit means adjacent vertices share an orbit.
    bool same = false;
    for (size_t v = a.vperm[x.src];; v = a.vperm[v]) {
      if (v == x.tgt) same = true;
      if (v == x.src) break;
    }
    if (same) {
      out.emplace_back("adjacent orbit");
      break;
    }
  }
  bool period_ok = true;
  for (int d : a.d_vertex) period_ok = period_ok && a.period % d == 0;
  for (int d : a.d_arrow) period_ok = period_ok && a.period % d == 0;
  if (!period_ok) out.emplace_back("period is not a multiple of every orbit size");
  return out;
}

std::vector<size_t> orbit_representatives(const Quiver& q, const AdmAut& a) {
  std::vector<size_t> reps;
  std::vector<bool> seen(q.num_vertices(), false);
  for (size_t i = 0; i < q.num_vertices(); ++i) {
    if (seen[i]) continue;
    reps.push_back(i);
    for (size_t v = i; !seen[v]; v = a.vperm[v]) seen[v] = true;
  }
  return reps;
}

size_t SplitQuotient::split_vertex(size_t rep, int j) const {
  return first_split_vertex.at(rep) + static_cast<size_t>(j);
}

SplitQuotient split_quotient(const Quiver& q, const AdmAut& a) {
  {
    const auto bad = validate(q, a);
    if (!bad.empty()) throw std::invalid_argument("split_quotient: invalid input: " + bad.front());
  }
  SplitQuotient s;
  s.period = a.period;
  s.reps = orbit_representatives(q, a);
  s.rep_of.assign(q.num_vertices(), 0);
  s.power_of.assign(q.num_vertices(), 0);
  for (size_t r = 0; r < s.reps.size(); ++r) {
    size_t v = s.reps[r];
    for (int k = 0; k < a.d_vertex[s.reps[r]]; ++k, v = a.vperm[v]) {
      s.rep_of[v] = r;
      s.power_of[v] = k;
    }
  }
  s.arrow_orbit_of.assign(q.num_arrows(), 0);
  std::vector<bool> seen(q.num_arrows(), false);
  for (size_t h = 0; h < q.num_arrows(); ++h) {
    if (seen[h]) continue;
    std::vector<size_t> orbit;
    for (size_t x = h; !seen[x]; x = a.aperm[x]) {
      seen[x] = true;
      s.arrow_orbit_of[x] = s.arrow_orbits.size();
      orbit.push_back(x);
    }
    s.arrow_orbits.push_back(std::move(orbit));
  }

  std::vector<std::string> vids;
  for (size_t r = 0; r < s.reps.size(); ++r) {
    const size_t i = s.reps[r];
    const int e = a.e_vertex[i];
    s.first_split_vertex.push_back(vids.size());
    for (int j = 0; j < e; ++j) {
      vids.push_back(e == 1 ? q.vertex_id(i) : q.vertex_id(i) + "|" + std::to_string(j));
      s.vinfo.push_back({r, j});
    }
  }

  // Arrows (h-hat, zeta, zeta'): with zeta = eta^(d_s j), zeta' = eta^(d_t j'),
  // the compatibility condition reduces to j = j' mod e_h.
  struct Raw {
    size_t orbit;
    int js, jt;
  };
  std::vector<Raw> raw;
  for (size_t o = 0; o < s.arrow_orbits.size(); ++o) {
    const Arrow& h = q.arrow(s.arrow_orbits[o].front());
    const int es = a.e_vertex[h.src], et = a.e_vertex[h.tgt], eh = a.e_arrow[s.arrow_orbits[o].front()];
    for (int js = 0; js < es; ++js)
      for (int jt = 0; jt < et; ++jt)
        if ((js - jt) % eh == 0) raw.push_back({o, js, jt});
  }
  auto key_of = [&](const Raw& r) {
    const Arrow& h = q.arrow(s.arrow_orbits[r.orbit].front());
    return std::make_tuple(r.orbit, r.js, r.jt, s.rep_of[h.src], s.rep_of[h.tgt]);
  };
  std::map<std::tuple<size_t, int, int>, size_t> index_of;
  for (size_t k = 0; k < raw.size(); ++k) index_of[{raw[k].orbit, raw[k].js, raw[k].jt}] = k;

  std::vector<std::string> aids(raw.size());
  std::map<std::string, int> used;
  for (size_t k = 0; k < raw.size(); ++k) {
    const auto [o, js, jt, rs, rt] = key_of(raw[k]);
    const std::string base = vids[s.split_vertex(rs, js)] + "->" + vids[s.split_vertex(rt, jt)];
    const int n = ++used[base];
    aids[k] = n == 1 ? base : base + "#" + std::to_string(n);
  }
  std::vector<ArrowSpec> specs;
  std::vector<std::string> omega;
  for (size_t k = 0; k < raw.size(); ++k) {
    const auto [o, js, jt, rs, rt] = key_of(raw[k]);
    const size_t bar_orbit = s.arrow_orbit_of[q.arrow(s.arrow_orbits[o].front()).bar];
    const size_t bar_k = index_of.at({bar_orbit, jt, js});
    specs.push_back({aids[k], vids[s.split_vertex(rs, js)], vids[s.split_vertex(rt, jt)], aids[bar_k]});
    if (q.arrow(s.arrow_orbits[o].front()).in_omega) omega.push_back(aids[k]);
    s.ainfo.push_back({o, js, jt});
  }
  s.split = Quiver(vids, specs, omega);
  s.arrow_lookup = index_of;

  std::vector<size_t> vp(vids.size()), ap(raw.size());
  for (size_t v = 0; v < vids.size(); ++v) {
    const auto [r, j] = s.vinfo[v];
    vp[v] = s.split_vertex(r, (j + 1) % a.e_vertex[s.reps[r]]);
  }
  for (size_t k = 0; k < raw.size(); ++k) {
    const auto [o, js, jt, rs, rt] = key_of(raw[k]);
    const int es = a.e_vertex[s.reps[rs]], et = a.e_vertex[s.reps[rt]];
    ap[k] = index_of.at({o, (js + 1) % es, (jt + 1) % et});
  }
  s.aut = make_aut(s.split, std::move(vp), std::move(ap), a.period);
  return s;
}

std::vector<std::vector<long>> cartan(const Quiver& q, const AdmAut& a) {
  const auto reps = orbit_representatives(q, a);
  std::vector<size_t> rep_of(q.num_vertices());
  for (size_t r = 0; r < reps.size(); ++r)
    for (size_t v = reps[r];; v = a.vperm[v]) {
      rep_of[v] = r;
      if (a.vperm[v] == reps[r]) break;
    }
  std::vector<std::vector<long>> count(reps.size(), std::vector<long>(reps.size(), 0));
  for (const auto& h : q.arrows()) ++count[rep_of[h.src]][rep_of[h.tgt]];
  std::vector<std::vector<long>> c(reps.size(), std::vector<long>(reps.size(), 0));
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = 0; j < reps.size(); ++j) {
      if (i == j) {
        c[i][j] = 2;
        continue;
      }
      const long d = a.d_vertex[reps[i]];
      if (count[i][j] % d != 0) throw std::logic_error("cartan: arrow count not divisible by orbit size");
      c[i][j] = -count[i][j] / d;
    }
  return c;
}

std::vector<EdgeOrbitRep> edge_orbit_reps(const Quiver& q, const AdmAut& a) {
  const auto reps = orbit_representatives(q, a);
  std::vector<bool> is_rep(q.num_vertices(), false);
  for (size_t r : reps) is_rep[r] = true;
  std::vector<size_t> rep_vertex(q.num_vertices());
  for (size_t r : reps)
    for (size_t v = r;; v = a.vperm[v]) {
      rep_vertex[v] = r;
      if (a.vperm[v] == r) break;
    }
  std::vector<EdgeOrbitRep> out;
  std::vector<bool> seen(q.num_arrows(), false);
  for (size_t h = 0; h < q.num_arrows(); ++h) {
    if (seen[h] || !q.arrow(h).in_omega) continue;
    std::vector<size_t> orbit;
    for (size_t x = h; !seen[x]; x = a.aperm[x]) {
      seen[x] = true;
      orbit.push_back(x);
    }
    std::sort(orbit.begin(), orbit.end());
    const auto it = std::find_if(orbit.begin(), orbit.end(), [&](size_t x) { return is_rep[q.arrow(x).src]; });
    const size_t h1 = *it;
    const size_t t = q.arrow(h1).tgt;
    int f = 0;
    for (size_t v = rep_vertex[t]; v != t; v = a.vperm[v]) ++f;
    out.push_back({h1, f});
  }
  return out;
}

bool is_finite_dynkin(const Quiver& q) {
  const size_t n = q.num_vertices();
  Matrix c = Matrix::scalar(n, Scalar(2));
  for (const auto& h : q.arrows()) c(h.src, h.tgt) -= Scalar(1);
  for (size_t k = 1; k <= n; ++k)
    if (!(determinant(c.block(0, 0, k, k)).rational() > 0)) return false;
  return true;
}

bool isomorphic(const Quiver& a, const Quiver& b) {
  const size_t n = a.num_vertices();
  if (n != b.num_vertices() || a.num_arrows() != b.num_arrows()) return false;
  auto counts = [n](const Quiver& q) {
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (const auto& h : q.arrows())
      if (h.in_omega) ++c[h.src][h.tgt];
    return c;
  };
  const auto ca = counts(a), cb = counts(b);
  auto degree = [n](const std::vector<std::vector<int>>& c, size_t v) {
    int in = 0, out = 0;
    for (size_t u = 0; u < n; ++u) {
      out += c[v][u];
      in += c[u][v];
    }
    return std::make_pair(in, out);
  };
  std::vector<size_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(size_t)> extend = [&](size_t v) {
    if (v == n) return true;
    for (size_t w = 0; w < n; ++w) {
      if (used[w] || degree(ca, v) != degree(cb, w)) continue;
      bool ok = true;
      for (size_t u = 0; u < v && ok; ++u) ok = ca[v][u] == cb[w][map[u]] && ca[u][v] == cb[map[u]][w];
      if (!ok || ca[v][v] != cb[w][w]) continue;
      map[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(0);
}

}  // namespace qf
