#include "equirot/channels.hpp"

#include <cmath>

#include "equirot/bipartite.hpp"
#include "equirot/rotation_conditions.hpp"

namespace equirot {

UnitalQubitChannel make_channel(std::vector<UnitalQubitChannel::Term> terms) {
  if (terms.empty() || terms.size() > 4) {
    throw BadProbability("channel needs between one and four terms");
  }
  double total = 0.0;
  for (const auto& t : terms) {
    if (t.weight < 0.0) {
      throw BadProbability("channel weights must be nonnegative");
    }
    total += t.weight;
  }
  if (std::abs(total - 1.0) > kAlgebraTol) {
    throw BadProbability("channel weights must sum to one");
  }
  return {std::move(terms)};
}

DensityMat2 density_from_ket(const Vec2C& ket) {
  return ket * ket.adjoint();
}

Mat2 apply_channel(const UnitalQubitChannel& ch, const DensityMat2& rho) {
  Mat2 out = Mat2::Zero();
  for (const auto& t : ch.terms) {
    Mat2 k = su2_to_matrix(t.kraus);
    out += t.weight * k * rho * k.adjoint();
  }
  return out;
}

UnitalQubitChannel bitflip_channel(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw BadProbability("flip probability must lie in [0, 1]");
  }
  return make_channel({{p, su2_identity()}, {1.0 - p, su2_pi_about(Vec3::UnitX())}});
}

UnitalQubitChannel depolarizing_channel(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw BadProbability("depolarizing probability must lie in [0, 1]");
  }
  double q = (1.0 - p) / 3.0;
  return make_channel({{p, su2_identity()},
                       {q, su2_pi_about(Vec3::UnitX())},
                       {q, su2_pi_about(Vec3::UnitY())},
                       {q, su2_pi_about(Vec3::UnitZ())}});
}

double one_sided_channel_fidelity(const UnitalQubitChannel& ch,
                                  const SU2Element& u, const SU2Element& v,
                                  double l0, double l1) {
  double total = 0.0;
  for (const auto& t : ch.terms) {
    Complex amp = product_overlap(conjugate_su2(u, t.kraus), conjugate_su2(v, su2_identity()),
                                  l0, l1);
    total += t.weight * std::norm(amp);
  }
  return total;
}

double channel_balance(const UnitalQubitChannel& ch, const SU2Element& u,
                       double l0, double l1) {
  double delta = l0 * l0 - l1 * l1;
  Mat3 rot = rotation_of(u.adjoint());
  double sum = 0.0;
  for (const auto& t : ch.terms) {
    double rz = t.kraus.rvec.z();
    double az = (rot * t.kraus.rvec).z();
    sum += t.weight * (az * az - rz * rz);
  }
  return delta * delta * sum;
}

ConditionResidual channel_condition(const UnitalQubitChannel& ch,
                                    const SU2Element& u, double l0, double l1,
                                    double tol) {
  return {std::abs(channel_balance(ch, u, l0, l1)), tol};
}

std::optional<double> find_invariance_angle(const UnitalQubitChannel& ch,
                                            const SU2Element& base,
                                            const Vec3& axis, double l0,
                                            double l1) {
  auto balance = [&](double t) {
    SU2Element u = su2_compose(axis_rotation(axis, t), base);
    return channel_balance(ch, u, l0, l1);
  };
  constexpr int kScan = 256;
  double prev = balance(0.0);
  for (int i = 1; i <= kScan; ++i) {
    double t = 2.0 * M_PI * i / kScan;
    double cur = balance(t);
    if (prev == 0.0) {
      return 2.0 * M_PI * (i - 1) / kScan;
    }
    if ((prev < 0.0) != (cur < 0.0)) {
      double lo = 2.0 * M_PI * (i - 1) / kScan;
      double hi = t;
      for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if ((balance(lo) < 0.0) != (balance(mid) < 0.0)) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    prev = cur;
  }
  return std::nullopt;
}

double depolarizing_p_for_amount(double r, double delta) {
  double d2 = delta * delta;
  if (r < d2 / 3.0 - 1e-12 || r > 1.0 + 1e-12) {
    throw AmountOutOfRange("fidelity is outside the reachable range");
  }
  return (3.0 * r - d2) / (3.0 - d2);
}

ConditionResidual density_level_condition(const SU2Element& u, const SU2Element& v,
                                          const SU2Element& w1, const SU2Element& w2,
                                          double l0, double l1, double tol) {
  PureState2Q base = make_psi0(l0, l1);
  Mat4 op = kron(su2_to_matrix(w1), su2_to_matrix(w2));
  double lhs = std::norm(overlap(apply_local(u, v, base), op));
  double rhs = std::norm(overlap(base, op));
  return {std::abs(lhs - rhs), tol};
}

}  // namespace equirot
