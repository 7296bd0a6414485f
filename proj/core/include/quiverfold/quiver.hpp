#pragma once

#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qf {

struct Arrow {
  std::string id;
  size_t src = 0;
  size_t tgt = 0;
  size_t bar = 0;
  bool in_omega = false;
};

struct ArrowSpec {
  std::string id, src, tgt, bar;
};

/// A quiver (I, H, Omega): vertices, arrows with a reversal involution, and
/// an orientation. Vertices and arrows are addressed by index internally and
/// by string id at the boundary.
class Quiver {
 public:
  Quiver() = default;
  // Throws std::invalid_argument on duplicate or dangling ids. Structural
  // invariants (bar involution, acyclic orientation, ...) are reported by
  // violations() instead.
  Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows,
         const std::vector<std::string>& orientation);
  // Each (s, t) becomes an arrow "s->t" in Omega plus its reverse "t->s".
  static Quiver from_edges(std::vector<std::string> vertices,
                           const std::vector<std::pair<std::string, std::string>>& oriented_edges);

  size_t num_vertices() const { return vertices_.size(); }
  size_t num_arrows() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex_id(size_t i) const { return vertices_.at(i); }
  const Arrow& arrow(size_t h) const { return arrows_.at(h); }
  size_t vertex_index(const std::string& id) const;
  size_t arrow_index(const std::string& id) const;
  bool has_vertex(const std::string& id) const { return vmap_.count(id) > 0; }
  bool has_arrow(const std::string& id) const { return amap_.count(id) > 0; }
  std::vector<size_t> omega() const;

  std::vector<std::string> violations() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, size_t> vmap_;
  std::unordered_map<std::string, size_t> amap_;
};

/// Admissible automorphism together with its orbit data. d_* are orbit sizes,
/// e_* = period / d_*.
struct AdmAut {
  std::vector<size_t> vperm;
  std::vector<size_t> aperm;
  int period = 1;
  std::vector<int> d_vertex, e_vertex, d_arrow, e_arrow;

  size_t apply_vertex(size_t i, long k = 1) const;
  size_t apply_arrow(size_t h, long k = 1) const;
};

// Computes the derived orbit data. Throws std::invalid_argument if a
// permutation has the wrong length or is not a bijection.
AdmAut make_aut(const Quiver& q, std::vector<size_t> vperm, std::vector<size_t> aperm, int period);
AdmAut make_aut(const Quiver& q, const std::map<std::string, std::string>& vertex_perm,
                const std::map<std::string, std::string>& arrow_perm, int period);
// Arrow permutation induced by a vertex permutation; needs a quiver without
// parallel arrows.
AdmAut make_aut_from_vertices(const Quiver& q, const std::map<std::string, std::string>& vertex_perm,
                              int period);
AdmAut identity_aut(const Quiver& q, int period);

// Empty when (q, a) is a quiver with an admissible automorphism; otherwise
// one named entry per violated condition.
std::vector<std::string> validate(const Quiver& q, const AdmAut& a);

struct SplitVertex {
  size_t rep;  // index into SplitQuotient::reps
  int j;       // zeta = eta^(d_i * j), 0 <= j < e_i
};

struct SplitArrow {
  size_t orbit;  // index into SplitQuotient::arrow_orbits
  int j_src;
  int j_tgt;
};

struct SplitQuotient {
  int period = 1;
  std::vector<size_t> reps;                     // I-hat as vertex indices of the original quiver
  std::vector<size_t> rep_of;                   // original vertex -> index into reps
  std::vector<int> power_of;                    // original vertex i = a^power_of[i](rep)
  std::vector<std::vector<size_t>> arrow_orbits;  // H-hat, each orbit in a-order from its first arrow
  std::vector<size_t> arrow_orbit_of;           // original arrow -> index into arrow_orbits
  Quiver split;
  AdmAut aut;  // the induced automorphism a-tilde
  std::vector<SplitVertex> vinfo;
  std::vector<SplitArrow> ainfo;

  // Index in `split` of the vertex (reps[rep], eta^(d*j)).
  size_t split_vertex(size_t rep, int j) const;
  // Offset of the first split vertex of a representative; vertices of one
  // representative are consecutive with j ascending.
  std::vector<size_t> first_split_vertex;
  // (orbit, j_src, j_tgt) -> arrow index in `split`
  std::map<std::tuple<size_t, int, int>, size_t> arrow_lookup;
};

SplitQuotient split_quotient(const Quiver& q, const AdmAut& a);

// Integer Cartan matrix indexed by the orbit representatives (first vertex of
// each orbit in declared order).
std::vector<std::vector<long>> cartan(const Quiver& q, const AdmAut& a);
std::vector<size_t> orbit_representatives(const Quiver& q, const AdmAut& a);

struct EdgeOrbitRep {
  size_t arrow;  // h_1, an arrow of Omega with source in I-hat
  int f;         // t(h_1) = a^f(t-hat), 0 <= f < d_{t(h_1)}
};

// One entry per a-orbit of Omega, in order of first appearance.
std::vector<EdgeOrbitRep> edge_orbit_reps(const Quiver& q, const AdmAut& a);

// Positive definiteness of the symmetric Cartan matrix 2I - adjacency.
bool is_finite_dynkin(const Quiver& q);

// Bijection on vertices and arrows that respects src, tgt, bar and Omega,
// found by backtracking. Meant for fixture-sized quivers.
bool isomorphic(const Quiver& a, const Quiver& b);

}  // namespace qf
