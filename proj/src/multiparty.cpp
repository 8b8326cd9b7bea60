#include "equirot/multiparty.hpp"

#include <cmath>

#include <Eigen/QR>

namespace equirot {

namespace {
constexpr Complex kI(0.0, 1.0);
}

PureState3Q ghz() {
  PureState3Q s;
  s.amp(0) = 1.0 / std::sqrt(2.0);
  s.amp(7) = 1.0 / std::sqrt(2.0);
  return s;
}

Mat2 euler_unitary(const EulerSU2& e) {
  double c = std::cos(e.alpha);
  double s = std::sin(e.alpha);
  Mat2 m;
  m(0, 0) = std::exp(kI * e.delta) * c;
  m(0, 1) = std::exp(kI * e.gamma) * s;
  m(1, 0) = -std::exp(-kI * e.gamma) * s;
  m(1, 1) = std::exp(-kI * e.delta) * c;
  return m;
}

PureState3Q ghz_orbit_state(const EulerSU2& e1, const EulerSU2& e2,
                            const EulerSU2& e3) {
  MatX op = kron(kron(euler_unitary(e1), euler_unitary(e2)), euler_unitary(e3));
  PureState3Q s;
  s.amp = op * ghz().amp;
  return s;
}

Mat4 v23_unitary(const EulerSU2& e1, const EulerSU2& e2, const EulerSU2& e3) {
  double c = std::cos(e1.alpha);
  double s = std::sin(e1.alpha);
  Mat4 m = Mat4::Identity();
  m(0, 0) = std::exp(kI * e1.delta) * c;
  m(3, 0) = std::exp(kI * e1.gamma) * s;
  m(0, 3) = -std::exp(-kI * e1.gamma) * s;
  m(3, 3) = std::exp(-kI * e1.delta) * c;
  return kron(euler_unitary(e2), euler_unitary(e3)) * m;
}

Complex ghz_rotation_amount(double alpha, double delta, double phase) {
  return std::exp(kI * phase) * std::cos(alpha) * std::cos(delta);
}

ConditionResidual verify_ghz_invariance(const EulerSU2& e1, const EulerSU2& e2,
                                        const EulerSU2& e3, const EulerSU2& rot,
                                        double phase, double tol) {
  PureState3Q s = ghz_orbit_state(e1, e2, e3);
  MatX op = kron(std::exp(kI * phase) * euler_unitary(rot),
                 MatX(Eigen::Matrix4cd::Identity()));
  Complex got = s.amp.dot(op * s.amp);
  return {std::abs(got - ghz_rotation_amount(rot.alpha, rot.delta, phase)), tol};
}

std::pair<double, double> solve_ghz_angles(double theta) {
  return {theta, 0.0};
}

Mat2 reduced_qubit(const PureState3Q& s, int which) {
  if (which < 0 || which > 2) {
    throw DimensionMismatch("qubit index must be 0, 1, or 2");
  }
  int stride = 1 << (2 - which);
  Mat2 rho = Mat2::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      Complex sum = 0.0;
      for (int rest = 0; rest < 4; ++rest) {
        int low = rest % stride;
        int high = rest / stride;
        int ia = high * 2 * stride + a * stride + low;
        int ib = high * 2 * stride + b * stride + low;
        sum += s.amp(ia) * std::conj(s.amp(ib));
      }
      rho(a, b) = sum;
    }
  }
  return rho;
}

Mat4 swap_matrix() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return m;
}

Mat4 su4_swap() {
  return std::exp(kI * (M_PI / 4.0)) * swap_matrix();
}

Complex swap_amount(const SU2Element& u, const SU2Element& v, double l0,
                    double l1) {
  PureState2Q s = apply_local(u, v, make_psi0(l0, l1));
  return overlap(s, su4_swap());
}

SwapBracket swap_bracket(const SU2Element& u, const SU2Element& v, double l0,
                         double l1) {
  Mat4 op = kron(su2_to_matrix(u), su2_to_matrix(v).conjugate());
  Vec4C phi_plus;
  phi_plus << 1.0, 0.0, 0.0, 1.0;
  phi_plus /= std::sqrt(2.0);
  auto term = [&](const Vec4C& chi) { return std::norm(phi_plus.dot(op * chi)); };
  Vec4C e00;
  e00 << 1.0, 0.0, 0.0, 0.0;
  Vec4C e11;
  e11 << 0.0, 0.0, 0.0, 1.0;
  Vec4C psi_p;
  psi_p << 0.0, 1.0, 1.0, 0.0;
  psi_p /= std::sqrt(2.0);
  Vec4C psi_m;
  psi_m << 0.0, 1.0, -1.0, 0.0;
  psi_m /= std::sqrt(2.0);
  SwapBracket b;
  b.t00 = term(e00);
  b.t11 = term(e11);
  b.psi_plus = term(psi_p);
  b.psi_minus = term(psi_m);
  b.value = l0 * l0 * b.t00 + l1 * l1 * b.t11 + l0 * l1 * (b.psi_plus - b.psi_minus);
  return b;
}

ConditionResidual swap_condition(const SU2Element& u, const SU2Element& v,
                                 double tol) {
  double dx = std::abs(u.rvec.x() - v.rvec.x());
  double dy = std::abs(u.rvec.y() - v.rvec.y());
  return {std::max(dx, dy), tol};
}

LocalPair sample_swap_matched(RandomStream& rng) {
  if (rng.uniform() < 0.5) {
    SU2Element u = haar_su2(rng);
    return {u, u};
  }
  return {axis_rotation(Vec3::UnitZ(), rng.uniform(0.0, 2.0 * M_PI)),
          axis_rotation(Vec3::UnitZ(), rng.uniform(0.0, 2.0 * M_PI))};
}

LocalPair sample_swap_invariant(RandomStream& rng) {
  SU2Element u = haar_su2(rng);
  SU2Element z = axis_rotation(Vec3::UnitZ(), rng.uniform(0.0, 2.0 * M_PI));
  return {u, su2_compose(u, z)};
}

MatX haar_unitary(int d, RandomStream& rng) {
  if (d < 1) {
    throw DimensionMismatch("dimension must be positive");
  }
  MatX g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    }
  }
  Eigen::HouseholderQR<MatX> qr(g);
  MatX q = qr.householderQ();
  MatX r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    Complex rj = r(j, j);
    q.col(j) *= std::abs(rj) > 0.0 ? rj / std::abs(rj) : Complex(1.0, 0.0);
  }
  Complex det = q.determinant();
  q *= std::exp(-kI * (std::arg(det) / d));
  return q;
}

void require_special_unitary(const MatX& m, double tol) {
  if (m.rows() != m.cols()) {
    throw NotSpecialUnitary("matrix is not square");
  }
  MatX gram = m.adjoint() * m;
  if ((gram - MatX::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() > tol) {
    throw NotSpecialUnitary("matrix is not unitary within tolerance");
  }
  if (std::abs(m.determinant() - Complex(1.0, 0.0)) > tol * m.rows()) {
    throw NotSpecialUnitary("determinant is not one within tolerance");
  }
}

Complex dxd_overlap(const MatX& w1, const MatX& w2, const MatrixState& state) {
  return (w1 * state.c * w2.transpose() * state.c.adjoint()).trace();
}

ConditionResidual dxd_condition(const MatX& w1, const MatX& w2, const MatX& u,
                                const MatX& v, const Eigen::VectorXd& dvals,
                                double tol, int max_dim) {
  int d = static_cast<int>(dvals.size());
  if (d < 2 || d > max_dim) {
    throw DimensionMismatch("schmidt vector length is outside the supported range");
  }
  for (const MatX* m : {&w1, &w2, &u, &v}) {
    if (m->rows() != d || m->cols() != d) {
      throw DimensionMismatch("operator dimensions do not match the schmidt vector");
    }
    require_special_unitary(*m);
  }
  for (int i = 0; i < d; ++i) {
    if (dvals(i) < 0.0 || (i > 0 && dvals(i) > dvals(i - 1) + 1e-12)) {
      throw BadSchmidtPair("schmidt vector must be nonnegative and descending");
    }
  }
  if (std::abs(dvals.squaredNorm() - 1.0) > 1e-9) {
    throw BadSchmidtPair("schmidt vector must have unit square sum");
  }
  MatX dmat = dvals.cast<Complex>().asDiagonal();
  MatrixState rotated{u * dmat * v.transpose()};
  MatrixState base{dmat};
  return {std::abs(dxd_overlap(w1, w2, rotated) - dxd_overlap(w1, w2, base)), tol};
}

}  // namespace equirot
