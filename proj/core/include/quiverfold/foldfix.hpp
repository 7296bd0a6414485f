#pragma once

#include <optional>
#include <vector>

#include "quiverfold/adhm.hpp"
#include "quiverfold/quiver.hpp"

namespace qf {

/// Everything needed to fold ADHM data for (quiver, a) with fixed graded
/// dimensions: the intertwiners phi_i : V_i -> V_a(i) and sigma_i : W_i ->
/// W_a(i), the split quotient, and for each orbit representative an
/// eigenbasis of the sigma composite with columns grouped by zeta.
struct FoldContext {
  QuiverPtr quiver;
  AdmAut aut;
  SplitQuotient sq;
  QuiverPtr split_quiver;
  std::vector<size_t> v, w;
  std::vector<Matrix> phi;
  std::vector<Matrix> sigma;
  std::vector<Matrix> eigenbasis;          // per representative, w x w
  std::vector<std::vector<size_t>> w_split;  // per representative, w_{i,zeta} in j order
  std::vector<EdgeOrbitRep> omega1;

  int period() const { return aut.period; }
  // zeta = eta^(d_i j) for the representative with index rep.
  Scalar zeta(size_t rep, int j) const;
  // w-tilde indexed by split vertex.
  std::vector<size_t> w_tilde() const;
};

// phi and sigma default to identities, which needs v and w to be constant
// on orbits. Throws std::invalid_argument if the compatibility conditions on
// phi or sigma fail, or the sigma composite is not diagonalizable over the
// e_i-th roots of unity.
FoldContext make_fold_context(QuiverPtr q, const AdmAut& a, std::vector<size_t> v, std::vector<size_t> w,
                              std::optional<std::vector<Matrix>> phi = std::nullopt,
                              std::optional<std::vector<Matrix>> sigma = std::nullopt);

// A_{2n-1} with its reflection; phi = id, sigma_i = id off the middle vertex
// and sigma_n an involution. By default sigma_n = diag(1^{w+}, (-1)^{w-}).
FoldContext make_type_a_fold_context(int n, std::vector<size_t> v, std::vector<size_t> w, size_t w_plus,
                                     std::optional<Matrix> sigma_n = std::nullopt);

/// A point of D(v): dimensions indexed by split vertex.
struct Decomposition {
  std::vector<size_t> vt;
  friend bool operator==(const Decomposition& a, const Decomposition& b) { return a.vt == b.vt; }
  friend bool operator<(const Decomposition& a, const Decomposition& b) { return a.vt < b.vt; }
};

std::vector<Decomposition> enumerate_decompositions(const FoldContext& ctx);

AdhmDatum theta(const FoldContext& ctx, const AdhmDatum& x);
GroupElement theta(const FoldContext& ctx, const GroupElement& g);

// g^vt: multiplication by zeta on the canonical blocks at representatives,
// identity elsewhere.
GroupElement g_tilde(const FoldContext& ctx, const Decomposition& d);

// psi_vt(y) for y over the split quotient with dimensions (vt, w-tilde).
AdhmDatum psi_embed(const FoldContext& ctx, const Decomposition& d, const AdhmDatum& y);

// rho_vt : G_Vtilde -> G_V.
GroupElement rho_v(const FoldContext& ctx, const Decomposition& d, const GroupElement& h);
// rho^{-1} : G_Wtilde -> G_W^theta.
GroupElement rho_w_inverse(const FoldContext& ctx, const GroupElement& alpha);

struct FixedPoint {
  Decomposition d;
  GroupElement g;       // g^x with g . theta(x) = x
  GroupElement h;       // normalizing element, normalized = h . x
  AdhmDatum normalized;
  AdhmDatum preimage;   // psi_d(preimage) = normalized
};

// nullopt when the G_V-orbit of x is not theta-stable.
std::optional<FixedPoint> classify_fixed(const FoldContext& ctx, const AdhmDatum& x);

// lambda with theta(alpha) = lambda alpha, if any.
std::optional<Scalar> is_theta_similitude(const FoldContext& ctx, const GroupElement& alpha);

// v'_{i,zeta} = v_{i, zeta lambda^{-d_i}}.
Decomposition component_permutation(const FoldContext& ctx, const Scalar& lambda, const Decomposition& d);

// Random point of M(V, W) over the split quotient for the given decomposition
// (convenience around sample_point).
SampleResult sample_split_point(const FoldContext& ctx, const Decomposition& d, std::uint64_t seed,
                                const SampleOptions& opts = {});

}  // namespace qf
