#pragma once

#include <utility>

#include "equirot/bipartite.hpp"
#include "equirot/su2.hpp"
#include "equirot/types.hpp"

namespace equirot {

// <psi0|(A (x) B)|psi0> in closed form for A = a0 + i alpha.sigma,
// B = b0 + i beta.sigma and psi0 = l0|00> + l1|11>:
//   a0 b0 + i a0 beta_z D + i b0 alpha_z D
//   - [2 l0 l1 (alpha_x beta_x - alpha_y beta_y) + alpha_z beta_z],
// with D = l0^2 - l1^2.
Complex product_overlap(const SU2Element& a, const SU2Element& b, double l0,
                        double l1);

// <psi0|(W1 (x) I)|psi0> = r0 + i r_z (l0^2 - l1^2).
Complex one_sided_amount(const SU2Element& w1, double l0, double l1);

// Residual |D * ((R_{u^dag} r)_z - r_z)|. Zero exactly when the overlap with
// W1 (x) I is unchanged on (u (x) v)|psi0> for every v.
ConditionResidual one_sided_condition(const SU2Element& u, const SU2Element& w1,
                                      double l0, double l1,
                                      double tol = kPredicateTol);

// Constructive sampler of the one-sided solution set: a rotation about the
// operator axis followed by a rotation about z, adjointed. Falls back to a
// Haar draw when the operator axis vanishes (every u is then a solution).
SU2Element sample_one_sided_set(const SU2Element& w1, RandomStream& rng);

// Residual |overlap((u (x) v)|psi0>, W1 (x) W2) - overlap(|psi0>, W1 (x) W2)|.
ConditionResidual two_sided_condition(const SU2Element& u, const SU2Element& v,
                                      const SU2Element& w1, const SU2Element& w2,
                                      double l0, double l1,
                                      double tol = kPredicateTol);

// Left-minus-right of the single-equation form that adds the z-linear terms
// to the product terms without the D factor. Agrees with the semantic
// residual above whenever D != 0; at D = 0 it can reject states the overlap
// equality accepts.
double two_sided_eq4_residual(const SU2Element& u, const SU2Element& v,
                              const SU2Element& w1, const SU2Element& w2,
                              double l0, double l1);

struct LocalPair {
  SU2Element u;
  SU2Element v;
};

// Constructive sampler of pairs satisfying the two-sided condition: draws v,
// then intersects the constraint planes with the sphere of rotated operator
// axes to solve for u. Mixes in opposite z-rotation pairs, which satisfy the
// condition for every (w1, w2, l0, l1), and falls back to them when the
// intersection is empty.
LocalPair sample_two_sided_set(const SU2Element& w1, const SU2Element& w2,
                               double l0, double l1, RandomStream& rng);

// Residual |v(theta, phi) . rvec - r_z| for membership of the Bloch-sphere
// circle on which the overlap with w1 equals <0|w1|0>.
ConditionResidual circle_set_predicate(const SU2Element& w1, double theta,
                                       double phi, double tol = kPredicateTol);

struct CirclePoint {
  double theta = 0.0;
  double phi = 0.0;
  BlochState state;
};

// Uniform point on the circle above; uniform over the whole sphere when the
// operator axis vanishes.
CirclePoint sample_circle_state(const SU2Element& w1, RandomStream& rng);

// sqrt(lambda) psi1 (x) e0 + sqrt(1 - lambda) psi2 (x) e1 for psi1, psi2 on
// the circle of w1 and {e0, e1} orthonormal.
PureState2Q build_chi(double lambda, const Vec2C& psi1, const Vec2C& psi2,
                      const Vec2C& e0, const Vec2C& e1, const SU2Element& w1);

// Squared Schmidt coefficients (1 +- |R|)/2 of a chi state, where
// |R|^2 = 1 - 2 lambda (1 - lambda) (1 - dot) and dot = v1 . v2.
std::pair<double, double> chi_schmidt_eigs(double lambda, double dot);

// |rvec_u|^2 r - (rvec_u . r) rvec_u - r0_u (rvec_u x r) with r = rvec of w1;
// equals (r - R_{u^dag} r) / 2, so its z component vanishes exactly on the
// one-sided solution set.
Vec3 t1_vector(const SU2Element& u, const SU2Element& w1);

// Two-sided condition specialized to w1 = w2 = i(sx + sy)/sqrt(2): residual
// |T1 . T2| with T1 = (2 l0 l1 a_x, -2 l0 l1 a_y, a_z), a = R_{u^dag} r, and
// T2 = R_{v^dag} r. Zero exactly when the overlap vanishes on the rotated
// state, matching the untouched one.
ConditionResidual not_twosided_condition(const SU2Element& u, const SU2Element& v,
                                         double l0, double l1,
                                         double tol = kPredicateTol);

// Fixed half-turn about (x + y)/sqrt(2), the operator whose circle is a great
// circle; used by the condition above.
SU2Element su2_not_xy();

// SU(2) element whose Bloch rotation takes `from` to `to` (equal norms).
SU2Element rotation_taking(const Vec3& from, const Vec3& to);

}  // namespace equirot
