#include "equirot/rotation_conditions.hpp"

#include <algorithm>
#include <cmath>

namespace equirot {

namespace {

constexpr double kDegenerate = 1e-12;

Vec3 unit_perpendicular(const Vec3& n) {
  Vec3 seed = std::abs(n.x()) <= std::abs(n.y())
                  ? (std::abs(n.x()) <= std::abs(n.z()) ? Vec3::UnitX() : Vec3::UnitZ())
                  : (std::abs(n.y()) <= std::abs(n.z()) ? Vec3::UnitY() : Vec3::UnitZ());
  return n.cross(seed).normalized();
}

}  // namespace

Complex product_overlap(const SU2Element& a, const SU2Element& b, double l0,
                        double l1) {
  double delta = l0 * l0 - l1 * l1;
  const Vec3& al = a.rvec;
  const Vec3& be = b.rvec;
  double bracket = 2.0 * l0 * l1 * (al.x() * be.x() - al.y() * be.y()) +
                   al.z() * be.z();
  return Complex(a.r0 * b.r0 - bracket,
                 delta * (a.r0 * be.z() + b.r0 * al.z()));
}

Complex one_sided_amount(const SU2Element& w1, double l0, double l1) {
  return Complex(w1.r0, (l0 * l0 - l1 * l1) * w1.rvec.z());
}

ConditionResidual one_sided_condition(const SU2Element& u, const SU2Element& w1,
                                      double l0, double l1, double tol) {
  double delta = l0 * l0 - l1 * l1;
  Vec3 rotated = rotation_of(u.adjoint()) * w1.rvec;
  return {std::abs(delta * (rotated.z() - w1.rvec.z())), tol};
}

SU2Element sample_one_sided_set(const SU2Element& w1, RandomStream& rng) {
  double axis_norm = w1.rvec.norm();
  if (axis_norm < kDegenerate) {
    return haar_su2(rng);
  }
  SU2Element about_axis = axis_rotation(w1.rvec / axis_norm, rng.uniform(0.0, 2.0 * M_PI));
  SU2Element about_z = axis_rotation(Vec3::UnitZ(), rng.uniform(0.0, 2.0 * M_PI));
  return su2_compose(about_z, about_axis).adjoint();
}

ConditionResidual two_sided_condition(const SU2Element& u, const SU2Element& v,
                                      const SU2Element& w1, const SU2Element& w2,
                                      double l0, double l1, double tol) {
  PureState2Q rotated = apply_local(u, v, make_psi0(l0, l1));
  Mat4 op = kron(su2_to_matrix(w1), su2_to_matrix(w2));
  Complex lhs = overlap(rotated, op);
  Complex rhs = overlap(make_psi0(l0, l1), op);
  return {std::abs(lhs - rhs), tol};
}

double two_sided_eq4_residual(const SU2Element& u, const SU2Element& v,
                              const SU2Element& w1, const SU2Element& w2,
                              double l0, double l1) {
  Vec3 al = rotation_of(u.adjoint()) * w1.rvec;
  Vec3 be = rotation_of(v.adjoint()) * w2.rvec;
  const Vec3& r1 = w1.rvec;
  const Vec3& r2 = w2.rvec;
  double lhs = w1.r0 * be.z() + w2.r0 * al.z() +
               2.0 * l0 * l1 * (al.x() * be.x() - al.y() * be.y()) +
               al.z() * be.z();
  double rhs = w1.r0 * r2.z() + w2.r0 * r1.z() +
               2.0 * l0 * l1 * (r1.x() * r2.x() - r1.y() * r2.y()) +
               r1.z() * r2.z();
  return std::abs(lhs - rhs);
}

SU2Element su2_not_xy() {
  return su2_pi_about(Vec3(1.0, 1.0, 0.0));
}

SU2Element rotation_taking(const Vec3& from, const Vec3& to) {
  double nf = from.norm();
  double nt = to.norm();
  if (nf < kDegenerate || nt < kDegenerate) {
    return su2_identity();
  }
  Vec3 a = from / nf;
  Vec3 b = to / nt;
  double c = std::clamp(a.dot(b), -1.0, 1.0);
  if (1.0 - c < 1e-14) {
    return su2_identity();
  }
  if (1.0 + c < 1e-14) {
    return su2_pi_about(unit_perpendicular(a));
  }
  return axis_rotation(a.cross(b).normalized(), std::acos(c));
}

namespace {

// u whose adjoint rotation maps the operator axis r1 onto alpha, with the
// stabilizer angle drawn at random.
SU2Element u_from_alpha(const Vec3& r1, const Vec3& alpha, RandomStream& rng) {
  SU2Element spin = axis_rotation(r1.normalized(), rng.uniform(0.0, 2.0 * M_PI));
  return su2_compose(rotation_taking(r1, alpha), spin).adjoint();
}

LocalPair opposite_z_pair(RandomStream& rng) {
  double s = rng.uniform(0.0, 2.0 * M_PI);
  return {axis_rotation(Vec3::UnitZ(), s), axis_rotation(Vec3::UnitZ(), -s)};
}

}  // namespace

LocalPair sample_two_sided_set(const SU2Element& w1, const SU2Element& w2,
                               double l0, double l1, RandomStream& rng) {
  double delta = l0 * l0 - l1 * l1;
  const Vec3& r1 = w1.rvec;
  const Vec3& r2 = w2.rvec;
  double rho1 = r1.norm();
  double rho2 = r2.norm();

  if (rho1 < kDegenerate && rho2 < kDegenerate) {
    return {haar_su2(rng), haar_su2(rng)};
  }
  if (rho1 < kDegenerate) {
    SU2Element v = std::abs(delta) < kDegenerate ? haar_su2(rng)
                                                 : sample_one_sided_set(w2, rng);
    return {haar_su2(rng), v};
  }
  if (rho2 < kDegenerate) {
    SU2Element u = std::abs(delta) < kDegenerate ? haar_su2(rng)
                                                 : sample_one_sided_set(w1, rng);
    return {u, haar_su2(rng)};
  }

  if (rng.uniform() < 0.5) {
    return opposite_z_pair(rng);
  }

  double target = 2.0 * l0 * l1 * (r1.x() * r2.x() - r1.y() * r2.y()) +
                  r1.z() * r2.z();
  bool z_constrained = std::abs(delta) >= kDegenerate && std::abs(w2.r0) >= kDegenerate;
  bool v_one_sided = std::abs(delta) >= kDegenerate && std::abs(w2.r0) < kDegenerate &&
                     std::abs(w1.r0) >= kDegenerate;

  for (int attempt = 0; attempt < 64; ++attempt) {
    SU2Element v = v_one_sided ? sample_one_sided_set(w2, rng) : haar_su2(rng);
    Vec3 be = rotation_of(v.adjoint()) * r2;
    Vec3 m(2.0 * l0 * l1 * be.x(), -2.0 * l0 * l1 * be.y(), be.z());

    if (!z_constrained) {
      // One plane: alpha . m = target on the sphere of radius rho1.
      double mn = m.norm();
      if (mn < kDegenerate) {
        if (std::abs(target) > 1e-9) {
          continue;
        }
        Vec3 alpha = rho1 * rotation_of(haar_su2(rng)) * Vec3::UnitZ();
        return {u_from_alpha(r1, alpha, rng), v};
      }
      double h = target / mn;
      if (std::abs(h) > rho1) {
        continue;
      }
      Vec3 n = m / mn;
      Vec3 e1 = unit_perpendicular(n);
      Vec3 e2 = n.cross(e1);
      double t = rng.uniform(0.0, 2.0 * M_PI);
      double rad = std::sqrt(std::max(rho1 * rho1 - h * h, 0.0));
      Vec3 alpha = h * n + rad * (std::cos(t) * e1 + std::sin(t) * e2);
      return {u_from_alpha(r1, alpha, rng), v};
    }

    // Two planes: alpha_z fixed by the imaginary part, alpha . m = target.
    double z0 = r1.z() - (w1.r0 / w2.r0) * (be.z() - r2.z());
    if (std::abs(z0) > rho1) {
      continue;
    }
    double rad = std::sqrt(std::max(rho1 * rho1 - z0 * z0, 0.0));
    double kappa = target - m.z() * z0;
    double amp = rad * std::hypot(m.x(), m.y());
    double t;
    if (amp < kDegenerate) {
      if (std::abs(kappa) > 1e-9) {
        continue;
      }
      t = rng.uniform(0.0, 2.0 * M_PI);
    } else {
      if (std::abs(kappa) > amp) {
        continue;
      }
      double base = std::atan2(m.y(), m.x());
      double off = std::acos(std::clamp(kappa / amp, -1.0, 1.0));
      t = rng.uniform() < 0.5 ? base + off : base - off;
    }
    Vec3 alpha(rad * std::cos(t), rad * std::sin(t), z0);
    return {u_from_alpha(r1, alpha, rng), v};
  }
  return opposite_z_pair(rng);
}

ConditionResidual circle_set_predicate(const SU2Element& w1, double theta,
                                       double phi, double tol) {
  Vec3 v = bloch_state(theta, phi).bloch;
  return {std::abs(v.dot(w1.rvec) - w1.rvec.z()), tol};
}

CirclePoint sample_circle_state(const SU2Element& w1, RandomStream& rng) {
  double rho = w1.rvec.norm();
  Vec3 v;
  if (rho < kDegenerate) {
    double z = rng.uniform(-1.0, 1.0);
    double p = rng.uniform(0.0, 2.0 * M_PI);
    double s = std::sqrt(std::max(1.0 - z * z, 0.0));
    v = Vec3(s * std::cos(p), s * std::sin(p), z);
  } else {
    Vec3 n = w1.rvec / rho;
    double h = w1.rvec.z() / rho;
    Vec3 e1 = unit_perpendicular(n);
    Vec3 e2 = n.cross(e1);
    double t = rng.uniform(0.0, 2.0 * M_PI);
    double rad = std::sqrt(std::max(1.0 - h * h, 0.0));
    v = h * n + rad * (std::cos(t) * e1 + std::sin(t) * e2);
  }
  CirclePoint pt;
  pt.theta = std::acos(std::clamp(v.z(), -1.0, 1.0));
  pt.phi = std::atan2(v.y(), v.x());
  pt.state = bloch_state(pt.theta, pt.phi);
  return pt;
}

PureState2Q build_chi(double lambda, const Vec2C& psi1, const Vec2C& psi2,
                      const Vec2C& e0, const Vec2C& e1, const SU2Element& w1) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw BadProbability("mixing weight must lie in [0, 1]");
  }
  if (std::abs(e0.norm() - 1.0) > 1e-9 || std::abs(e1.norm() - 1.0) > 1e-9 ||
      std::abs(e0.dot(e1)) > 1e-9) {
    throw NotOrthonormal("second-qubit basis is not orthonormal");
  }
  for (const Vec2C& psi : {psi1, psi2}) {
    if (std::abs(psi.norm() - 1.0) > 1e-9) {
      throw NotOnCircle("first-qubit state is not normalized");
    }
    if (std::abs(bloch_of_ket(psi).dot(w1.rvec) - w1.rvec.z()) > kPredicateTol) {
      throw NotOnCircle("first-qubit state is off the equal-overlap circle");
    }
  }
  PureState2Q chi;
  double c1 = std::sqrt(lambda);
  double c2 = std::sqrt(1.0 - lambda);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      chi.amp(2 * i + j) = c1 * psi1(i) * e0(j) + c2 * psi2(i) * e1(j);
    }
  }
  return chi;
}

std::pair<double, double> chi_schmidt_eigs(double lambda, double dot) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw BadProbability("mixing weight must lie in [0, 1]");
  }
  if (!(dot >= -1.0 && dot <= 1.0)) {
    throw Error("bloch-vector dot product must lie in [-1, 1]");
  }
  double r2 = 1.0 - 2.0 * lambda * (1.0 - lambda) * (1.0 - dot);
  double r = std::sqrt(std::max(r2, 0.0));
  return {(1.0 + r) / 2.0, (1.0 - r) / 2.0};
}

Vec3 t1_vector(const SU2Element& u, const SU2Element& w1) {
  const Vec3& a = u.rvec;
  const Vec3& r = w1.rvec;
  return a.squaredNorm() * r - a.dot(r) * a - u.r0 * a.cross(r);
}

ConditionResidual not_twosided_condition(const SU2Element& u, const SU2Element& v,
                                         double l0, double l1, double tol) {
  SU2Element w = su2_not_xy();
  Vec3 al = rotation_of(u.adjoint()) * w.rvec;
  Vec3 be = rotation_of(v.adjoint()) * w.rvec;
  Vec3 t1(2.0 * l0 * l1 * al.x(), -2.0 * l0 * l1 * al.y(), al.z());
  return {std::abs(t1.dot(be)), tol};
}

}  // namespace equirot
