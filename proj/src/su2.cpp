#include "equirot/su2.hpp"

#include <cmath>

namespace equirot {

namespace {
constexpr Complex kI(0.0, 1.0);
}

SU2Element su2_normalized(double r0, const Vec3& rvec) {
  double n = std::sqrt(r0 * r0 + rvec.squaredNorm());
  if (n < 1e-12) {
    throw NotSpecialUnitary("quaternion has near-zero norm");
  }
  return {r0 / n, rvec / n};
}

Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 pauli_y() {
  Mat2 m;
  m << 0, -kI, kI, 0;
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

SU2Element su2_identity() { return {1.0, Vec3::Zero()}; }

SU2Element su2_pi_about(const Vec3& axis) {
  return su2_normalized(0.0, axis);
}

SU2Element axis_rotation(const Vec3& axis, double angle) {
  Vec3 n = axis.normalized();
  // exp(-i (angle/2) n.sigma) rotates Bloch vectors about n by angle.
  return {std::cos(angle / 2.0), -std::sin(angle / 2.0) * n};
}

Mat2 su2_to_matrix(const SU2Element& w) {
  Mat2 m;
  m(0, 0) = Complex(w.r0, w.rvec.z());
  m(0, 1) = Complex(w.rvec.y(), w.rvec.x());
  m(1, 0) = Complex(-w.rvec.y(), w.rvec.x());
  m(1, 1) = Complex(w.r0, -w.rvec.z());
  return m;
}

SU2Element su2_from_matrix(const Mat2& m, double tol) {
  double r0 = 0.5 * (m(0, 0).real() + m(1, 1).real());
  Vec3 rvec(0.5 * (m(0, 1).imag() + m(1, 0).imag()),
            0.5 * (m(0, 1).real() - m(1, 0).real()),
            0.5 * (m(0, 0).imag() - m(1, 1).imag()));
  SU2Element w = su2_normalized(r0, rvec);
  if ((su2_to_matrix(w) - m).cwiseAbs().maxCoeff() > tol) {
    throw NotSpecialUnitary("matrix is not special unitary within tolerance");
  }
  return w;
}

SU2Element su2_compose(const SU2Element& a, const SU2Element& b) {
  double r0 = a.r0 * b.r0 - a.rvec.dot(b.rvec);
  Vec3 rvec = a.r0 * b.rvec + b.r0 * a.rvec - a.rvec.cross(b.rvec);
  return su2_normalized(r0, rvec);
}

Mat3 rotation_of(const SU2Element& w) {
  const Vec3& r = w.rvec;
  Mat3 cross;
  cross << 0, -r.z(), r.y(), r.z(), 0, -r.x(), -r.y(), r.x(), 0;
  return 2.0 * r * r.transpose() + (1.0 - 2.0 * r.squaredNorm()) * Mat3::Identity() -
         2.0 * w.r0 * cross;
}

SU2Element conjugate_su2(const SU2Element& u, const SU2Element& w) {
  return {w.r0, rotation_of(u.adjoint()) * w.rvec};
}

SU2Element haar_su2(RandomStream& rng) {
  while (true) {
    double r0 = rng.gaussian();
    Vec3 rvec(rng.gaussian(), rng.gaussian(), rng.gaussian());
    double n = std::sqrt(r0 * r0 + rvec.squaredNorm());
    if (n > 1e-6) {
      return {r0 / n, rvec / n};
    }
  }
}

BlochState bloch_state(double theta, double phi) {
  BlochState s;
  s.ket = Vec2C(Complex(std::cos(theta / 2.0), 0.0),
                std::exp(kI * phi) * std::sin(theta / 2.0));
  s.bloch = Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                 std::cos(theta));
  return s;
}

Vec3 bloch_of_ket(const Vec2C& ket) {
  Complex off = std::conj(ket(0)) * ket(1);
  return Vec3(2.0 * off.real(), 2.0 * off.imag(),
              std::norm(ket(0)) - std::norm(ket(1)));
}

}  // namespace equirot
