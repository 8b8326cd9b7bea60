#include "equirot/bipartite.hpp"

#include <array>
#include <cmath>

#include <Eigen/SVD>

namespace equirot {

MatX kron(const MatX& a, const MatX& b) {
  MatX out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

PureState2Q make_psi0(double l0, double l1) {
  if (!(l0 >= 0.0 && l1 >= 0.0 && l0 >= l1)) {
    throw BadSchmidtPair("coefficients must satisfy l0 >= l1 >= 0");
  }
  if (std::abs(l0 * l0 + l1 * l1 - 1.0) > 1e-9) {
    throw BadSchmidtPair("coefficients must satisfy l0^2 + l1^2 = 1");
  }
  PureState2Q s;
  s.amp(0) = l0;
  s.amp(3) = l1;
  return s;
}

double entanglement(double l0, double l1) {
  auto term = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
  return term(l0 * l0) + term(l1 * l1);
}

PureState2Q apply_local(const SU2Element& u, const SU2Element& v,
                        const PureState2Q& s) {
  MatX op = kron(su2_to_matrix(u), su2_to_matrix(v));
  PureState2Q out;
  out.amp = op * s.amp;
  return out;
}

Complex overlap(const PureState2Q& s, const Mat4& op) {
  return s.amp.dot(op * s.amp);
}

namespace {

// det-1 phase fix with a deterministic sign: prefer nonnegative real part of
// the (0,0) entry, breaking ties lexicographically.
Mat2 fix_su2_phase(const Mat2& m) {
  Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Mat2 a = m / std::sqrt(det);
  auto key = [](const Mat2& x) {
    return std::array<double, 4>{x(0, 0).real(), x(0, 0).imag(), x(1, 0).real(),
                                 x(1, 0).imag()};
  };
  return key(a) >= key(Mat2(-a)) ? a : Mat2(-a);
}

}  // namespace

SchmidtForm schmidt_decompose(const PureState2Q& s) {
  Mat2 c;
  c << s.amp(0), s.amp(1), s.amp(2), s.amp(3);
  Eigen::JacobiSVD<Mat2> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SchmidtForm out;
  out.l0 = svd.singularValues()(0);
  out.l1 = svd.singularValues()(1);
  // C = A diag(l) B^dag means |psi> = (A (x) conj(B)) (l0|00> + l1|11>).
  out.u = su2_from_matrix(fix_su2_phase(svd.matrixU()));
  out.v = su2_from_matrix(fix_su2_phase(svd.matrixV().conjugate()));
  return out;
}

VecX vectorize(const MatrixState& m) {
  int d = m.dim();
  VecX amp(d * d);
  for (int i = 0; i < d; ++i) {
    amp.segment(i * d, d) = m.c.row(i).transpose();
  }
  return amp;
}

MatrixState devectorize(const VecX& amp) {
  int d = static_cast<int>(std::llround(std::sqrt(static_cast<double>(amp.size()))));
  if (static_cast<Eigen::Index>(d) * d != amp.size()) {
    throw DimensionMismatch("amplitude length is not a perfect square");
  }
  MatrixState m;
  m.c.resize(d, d);
  for (int i = 0; i < d; ++i) {
    m.c.row(i) = amp.segment(i * d, d).transpose();
  }
  return m;
}

MatrixState apply_local(const MatX& u, const MatX& v, const MatrixState& m) {
  if (u.rows() != m.c.rows() || u.cols() != m.c.rows() || v.rows() != m.c.cols() ||
      v.cols() != m.c.cols()) {
    throw DimensionMismatch("local operator dimensions do not match the state");
  }
  MatrixState out;
  out.c = u * m.c * v.transpose();
  return out;
}

}  // namespace equirot
