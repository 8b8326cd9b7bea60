#pragma once

#include <optional>
#include <vector>

#include "equirot/su2.hpp"
#include "equirot/types.hpp"

namespace equirot {

// Convex mixture of SU(2) conjugations: rho -> sum_j w_j K_j rho K_j^dag.
// Unital and trace preserving by construction.
struct UnitalQubitChannel {
  struct Term {
    double weight = 0.0;
    SU2Element kraus;
  };
  std::vector<Term> terms;
};

// Validates 1..4 terms, weights >= 0 summing to 1 within 1e-12.
UnitalQubitChannel make_channel(std::vector<UnitalQubitChannel::Term> terms);

// Hermitian, trace-1, positive 2x2 density matrix.
using DensityMat2 = Mat2;

DensityMat2 density_from_ket(const Vec2C& ket);

Mat2 apply_channel(const UnitalQubitChannel& ch, const DensityMat2& rho);

// rho -> p rho + (1 - p) sx rho sx.
UnitalQubitChannel bitflip_channel(double p);

// rho -> p rho + (1 - p)/3 (sx rho sx + sy rho sy + sz rho sz).
UnitalQubitChannel depolarizing_channel(double p);

// <psi|(T (x) id)(|psi><psi|)|psi> for psi = (u (x) v)|psi0>; equals
// sum_j w_j |<psi|(K_j (x) I)|psi>|^2.
double one_sided_channel_fidelity(const UnitalQubitChannel& ch,
                                  const SU2Element& u, const SU2Element& v,
                                  double l0, double l1);

// Signed balance D^2 sum_j w_j [((R_{u^dag} r_j)_z)^2 - (r_j_z)^2]; the
// fidelity is unchanged under u exactly when it vanishes.
double channel_balance(const UnitalQubitChannel& ch, const SU2Element& u,
                       double l0, double l1);

ConditionResidual channel_condition(const UnitalQubitChannel& ch,
                                    const SU2Element& u, double l0, double l1,
                                    double tol = kPredicateTol);

// Smallest angle t in [0, 2 pi) with channel_balance(axis_rotation(axis, t)
// compose base) = 0, found by scanning for a sign change and bisecting.
std::optional<double> find_invariance_angle(const UnitalQubitChannel& ch,
                                            const SU2Element& base,
                                            const Vec3& axis, double l0,
                                            double l1);

// Inverse of the depolarizing fidelity r = p + (1 - p) D^2 / 3 at fixed
// D = l0^2 - l1^2; requires D^2 / 3 <= r <= 1.
double depolarizing_p_for_amount(double r, double delta);

// Residual | |overlap((u (x) v)psi0, W1 (x) W2)|^2 - |overlap(psi0, W1 (x) W2)|^2 |,
// the phase-insensitive variant of the two-sided condition.
ConditionResidual density_level_condition(const SU2Element& u, const SU2Element& v,
                                          const SU2Element& w1, const SU2Element& w2,
                                          double l0, double l1,
                                          double tol = kPredicateTol);

}  // namespace equirot
