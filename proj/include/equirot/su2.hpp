#pragma once

#include "equirot/rng.hpp"
#include "equirot/types.hpp"

namespace equirot {

// W = r0*I + i*(rvec . sigma), with r0^2 + |rvec|^2 = 1.
struct SU2Element {
  double r0 = 1.0;
  Vec3 rvec = Vec3::Zero();

  SU2Element adjoint() const { return {r0, -rvec}; }
  double quaternion_norm() const { return std::sqrt(r0 * r0 + rvec.squaredNorm()); }
  bool is_unit(double tol = kAlgebraTol) const {
    return std::abs(quaternion_norm() - 1.0) <= tol;
  }
};

// Renormalizes the quaternion; throws NotSpecialUnitary on a near-zero vector.
SU2Element su2_normalized(double r0, const Vec3& rvec);

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

SU2Element su2_identity();
// i * (axis . sigma) for a unit axis; a half-turn of the Bloch sphere about axis.
SU2Element su2_pi_about(const Vec3& axis);
// Bloch rotation about a unit axis by the given angle.
SU2Element axis_rotation(const Vec3& axis, double angle);

Mat2 su2_to_matrix(const SU2Element& w);
// Throws NotSpecialUnitary unless m is unitary with det 1 within tol.
SU2Element su2_from_matrix(const Mat2& m, double tol = kPredicateTol);

// Group product: matrix(su2_compose(a, b)) == matrix(a) * matrix(b).
SU2Element su2_compose(const SU2Element& a, const SU2Element& b);

// The 3x3 rotation R with W (a.sigma) W^dag == (R a).sigma.
Mat3 rotation_of(const SU2Element& w);

// u^dag w u: r0 is unchanged, rvec is rotated by rotation_of(u.adjoint()).
SU2Element conjugate_su2(const SU2Element& u, const SU2Element& w);

// Uniform over SU(2): four independent standard normals, normalized.
SU2Element haar_su2(RandomStream& rng);

struct BlochState {
  Vec2C ket;
  Vec3 bloch;
};

// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> with Bloch vector
// (sin theta cos phi, sin theta sin phi, cos theta).
BlochState bloch_state(double theta, double phi);

// Bloch vector <psi|sigma|psi> of a unit single-qubit ket.
Vec3 bloch_of_ket(const Vec2C& ket);

}  // namespace equirot
