#pragma once

#include <utility>

#include "equirot/bipartite.hpp"
#include "equirot/rotation_conditions.hpp"
#include "equirot/su2.hpp"
#include "equirot/types.hpp"

namespace equirot {

using Vec8C = Eigen::Matrix<Complex, 8, 1>;

// Three-qubit pure state, amplitudes ordered |000>, |001>, ..., |111>.
struct PureState3Q {
  Vec8C amp = Vec8C::Zero();
};

// Angles (alpha, gamma, delta) of the SU(2) matrix
//   [ e^{i delta} cos a   e^{i gamma} sin a ]
//   [ -e^{-i gamma} sin a e^{-i delta} cos a ].
struct EulerSU2 {
  double alpha = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

PureState3Q ghz();

Mat2 euler_unitary(const EulerSU2& e);

// (U1 (x) U2 (x) U3)|GHZ>.
PureState3Q ghz_orbit_state(const EulerSU2& e1, const EulerSU2& e2,
                            const EulerSU2& e3);

// Two-qubit unitary V23 with (U1 (x) U2 (x) U3)|GHZ> = (I (x) V23)|GHZ>:
// acts as U1^T on span{|00>, |11>} in the basis rotated by U2 (x) U3.
Mat4 v23_unitary(const EulerSU2& e1, const EulerSU2& e2, const EulerSU2& e3);

// <GHZ|(e^{i phase} U(alpha, gamma, delta) (x) I (x) I)|GHZ> =
// e^{i phase} cos(alpha) cos(delta), independent of gamma.
Complex ghz_rotation_amount(double alpha, double delta, double phase);

// Residual of the amount above evaluated on the orbit state instead of GHZ;
// zero for every orbit triple.
ConditionResidual verify_ghz_invariance(const EulerSU2& e1, const EulerSU2& e2,
                                        const EulerSU2& e3, const EulerSU2& rot,
                                        double phase, double tol = kPredicateTol);

// Canonical (alpha, delta) with cos(alpha) cos(delta) = cos(theta): (theta, 0).
std::pair<double, double> solve_ghz_angles(double theta);

// Reduced density matrix of one qubit (0-indexed).
Mat2 reduced_qubit(const PureState3Q& s, int which);

// The two-qubit swap permutation, (1/2)[I(x)I + sum_k s_k (x) s_k].
Mat4 swap_matrix();
// e^{i pi/4} times the swap; determinant one.
Mat4 su4_swap();

// <psi0|(u^dag (x) v^dag) su4_swap (u (x) v)|psi0>, computed directly.
Complex swap_amount(const SU2Element& u, const SU2Element& v, double l0,
                    double l1);

// Decomposition of the amount over {|00>, |11>, |psi+>, |psi->}: amount =
// 2 e^{i pi/4} value with value = l0^2 t00 + l1^2 t11 + l0 l1 (tp - tm) and
// t_chi = |<phi+|(u (x) conj(v))|chi>|^2. Bounded by 1/2.
struct SwapBracket {
  double t00 = 0.0;
  double t11 = 0.0;
  double psi_plus = 0.0;
  double psi_minus = 0.0;
  double value = 0.0;
};

SwapBracket swap_bracket(const SU2Element& u, const SU2Element& v, double l0,
                         double l1);

// Residual max(|r_x^u - r_x^v|, |r_y^u - r_y^v|), the reported component
// matching diagnostic for swap invariance.
ConditionResidual swap_condition(const SU2Element& u, const SU2Element& v,
                                 double tol = kPredicateTol);

// Pairs that match the (r_x, r_y) components and keep the swap amount at
// e^{i pi/4}: equal elements or independent rotations about z.
LocalPair sample_swap_matched(RandomStream& rng);

// Pairs from the full invariance family v = u compose (rotation about z);
// they keep the amount at e^{i pi/4} but generally fail the component
// matching diagnostic, exhibiting candidates against its necessity.
LocalPair sample_swap_invariant(RandomStream& rng);

// Haar over U(d) via QR of a complex Gaussian matrix, phase corrected to
// det 1.
MatX haar_unitary(int d, RandomStream& rng);

// Throws NotSpecialUnitary unless m is unitary with unit determinant.
void require_special_unitary(const MatX& m, double tol = kPredicateTol);

// <<C|(W1 (x) W2)|C>> = Tr[W1 C W2^T C^dag].
Complex dxd_overlap(const MatX& w1, const MatX& w2, const MatrixState& state);

// Residual |Tr[W1 (U D V^T) W2^T (U D V^T)^dag] - Tr[W1 D W2^T D]| for the
// equally entangled d (x) d state with Schmidt vector dvals.
ConditionResidual dxd_condition(const MatX& w1, const MatX& w2, const MatX& u,
                                const MatX& v, const Eigen::VectorXd& dvals,
                                double tol = kPredicateTol, int max_dim = 8);

}  // namespace equirot
