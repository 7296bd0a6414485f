#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quiverfold/matrix.hpp"
#include "quiverfold/quiver.hpp"
#include "quiverfold/random.hpp"

namespace qf {

using QuiverPtr = std::shared_ptr<const Quiver>;

/// A point (B_h, Gamma_i, Delta_i) of M(V, W). B_h : V_s(h) -> V_t(h),
/// Gamma_i : W_i -> V_i, Delta_i : V_i -> W_i. All vectors are indexed by
/// vertex or arrow index of `quiver`.
struct AdhmDatum {
  QuiverPtr quiver;
  std::vector<size_t> v, w;
  std::vector<Matrix> B;
  std::vector<Matrix> Gamma;
  std::vector<Matrix> Delta;

  static AdhmDatum zero(QuiverPtr q, std::vector<size_t> v, std::vector<size_t> w);
  // Throws std::invalid_argument if any map has the wrong shape.
  void check_shapes() const;
  int field_order() const;
  size_t total_v() const;

  friend bool operator==(const AdhmDatum& a, const AdhmDatum& b) {
    return a.v == b.v && a.w == b.w && a.B == b.B && a.Gamma == b.Gamma && a.Delta == b.Delta;
  }
  friend bool operator!=(const AdhmDatum& a, const AdhmDatum& b) { return !(a == b); }
};

enum class GroupKind { V, W };

/// Element of G_V = prod GL(V_i) or G_W = prod GL(W_i), one block per vertex.
struct GroupElement {
  GroupKind kind = GroupKind::V;
  std::vector<Matrix> blocks;

  static GroupElement identity(GroupKind kind, const std::vector<size_t>& dims);
  static GroupElement random(GroupKind kind, const std::vector<size_t>& dims, Rng& rng);
  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.kind == b.kind && a.blocks == b.blocks;
  }
  bool is_identity() const;
};

// mu_i = sum_{h in Omega, s(h)=i} B_hbar B_h - sum_{h in Omega, t(h)=i} B_h B_hbar - Gamma_i Delta_i.
std::vector<Matrix> moment_residual(const AdhmDatum& x);
bool in_lambda(const AdhmDatum& x);

bool is_stable(const AdhmDatum& x);
// Every sufficiently long path product of the B maps vanishes.
bool is_b_nilpotent(const AdhmDatum& x);
// Delta = 0, plus B nilpotent unless the quiver is of finite Dynkin type.
bool in_lagrangian(const AdhmDatum& x, bool dynkin_finite);

// Throws std::domain_error on a singular block.
AdhmDatum act(const GroupElement& g, const AdhmDatum& x);

// Product of B along the shortest paths between consecutive waypoints.
// Written B_{w0,...,wm}, it maps V_{wm} to V_{w0}; B_{i,j} is the arrow j -> i.
// Throws if a segment has no path or more than one shortest path.
Matrix path_product(const AdhmDatum& x, const std::vector<size_t>& waypoints);
Matrix path_product(const AdhmDatum& x, const std::vector<std::string>& waypoints);

struct SampleOptions {
  bool delta_zero = false;
  bool require_stable = true;
  int max_attempts = 50;
  long entry_lo = -3;
  long entry_hi = 3;
};

struct SampleResult {
  std::optional<AdhmDatum> datum;
  int attempts = 0;
  std::string diagnostic;
};

// Samples forward maps and Gamma, then solves the moment relations, which
// are linear in the backward maps and Delta.
SampleResult sample_point(QuiverPtr q, const std::vector<size_t>& v, const std::vector<size_t>& w,
                          std::uint64_t seed, const SampleOptions& opts = {});

// The g in G_V with g . from = to, if it exists, is unique and is blockwise
// invertible.
std::optional<GroupElement> transporter(const AdhmDatum& from, const AdhmDatum& to);

// dim M(V,W) - rank of the differential of the moment map at x.
size_t tangent_dimension(const AdhmDatum& x);
size_t dim_gv(const std::vector<size_t>& v);

}  // namespace qf
