#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include <doctest.h>

#include "equirot/multiparty.hpp"

using namespace equirot;

namespace {

EulerSU2 random_euler(RandomStream& rng) {
  return {rng.uniform(0.0, 2.0 * M_PI), rng.uniform(0.0, 2.0 * M_PI),
          rng.uniform(0.0, 2.0 * M_PI)};
}

double qubit_entropy(const Mat2& rho) {
  Eigen::SelfAdjointEigenSolver<Mat2> eig(rho);
  double total = 0.0;
  for (int i = 0; i < 2; ++i) {
    double p = eig.eigenvalues()(i);
    if (p > 1e-15) {
      total -= p * std::log2(p);
    }
  }
  return total;
}

}  // namespace

TEST_SUITE("multiparty") {

TEST_CASE("the three-qubit reference state is maximally entangled in every cut") {
  PureState3Q g = ghz();
  CHECK(g.amp.norm() == doctest::Approx(1.0).epsilon(1e-15));
  for (int q = 0; q < 3; ++q) {
    Mat2 rho = reduced_qubit(g, q);
    CHECK((rho - 0.5 * Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(qubit_entropy(rho) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(reduced_qubit(g, 3), DimensionMismatch);
}

TEST_CASE("reduction of a product state is a projector") {
  PureState3Q s;
  s.amp(0) = 1.0;
  for (int q = 0; q < 3; ++q) {
    Mat2 rho = reduced_qubit(s, q);
    Mat2 expected = Mat2::Zero();
    expected(0, 0) = 1.0;
    CHECK((rho - expected).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("angle-parametrized unitaries") {
  Mat2 id = euler_unitary({0.0, 0.9, 0.0});
  CHECK((id - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  Mat2 flip = euler_unitary({M_PI / 2.0, 0.0, 0.3});
  Mat2 expected;
  expected << 0.0, 1.0, -1.0, 0.0;
  CHECK((flip - expected).cwiseAbs().maxCoeff() < 1e-12);

  RandomStream rng(81);
  for (int i = 0; i < 200; ++i) {
    Mat2 m = euler_unitary(random_euler(rng));
    CHECK((m.adjoint() * m - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(m.determinant() - Complex(1.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("orbit states keep every single-qubit reduction maximally mixed") {
  RandomStream rng(82);
  PureState3Q base = ghz_orbit_state({0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0});
  CHECK((base.amp - ghz().amp).norm() < 1e-15);

  for (int i = 0; i < 100; ++i) {
    PureState3Q s =
        ghz_orbit_state(random_euler(rng), random_euler(rng), random_euler(rng));
    CHECK(std::abs(s.amp.norm() - 1.0) < 1e-12);
    for (int q = 0; q < 3; ++q) {
      CHECK((reduced_qubit(s, q) - 0.5 * Mat2::Identity()).cwiseAbs().maxCoeff() <
            1e-10);
    }
  }
}

TEST_CASE("the first factor can be moved onto the last two") {
  RandomStream rng(83);
  for (int i = 0; i < 300; ++i) {
    EulerSU2 e1 = random_euler(rng);
    EulerSU2 e2 = random_euler(rng);
    EulerSU2 e3 = random_euler(rng);
    PureState3Q lhs = ghz_orbit_state(e1, e2, e3);
    Mat4 v23 = v23_unitary(e1, e2, e3);
    CHECK((v23.adjoint() * v23 - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    Vec8C rhs = kron(Mat2::Identity(), v23) * ghz().amp;
    CHECK((lhs.amp - rhs).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("rotation amount of the reference state") {
  CHECK(std::abs(ghz_rotation_amount(0.0, 0.0, 0.0) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(ghz_rotation_amount(M_PI / 2.0, 1.2, 0.7)) < 1e-15);

  RandomStream rng(84);
  for (int i = 0; i < 1000; ++i) {
    EulerSU2 rot = random_euler(rng);
    double phase = rng.uniform(0.0, 2.0 * M_PI);
    MatX op = kron(std::exp(Complex(0.0, phase)) * euler_unitary(rot),
                   MatX(Mat4::Identity()));
    PureState3Q g = ghz();
    Complex direct = g.amp.dot(op * g.amp);
    CHECK(std::abs(direct - ghz_rotation_amount(rot.alpha, rot.delta, phase)) < 1e-12);
  }
}

TEST_CASE("the rotation amount is constant over the whole orbit") {
  RandomStream rng(85);
  CHECK(verify_ghz_invariance({0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, 0.0).value <
        1e-15);
  for (int i = 0; i < 1000; ++i) {
    CHECK(verify_ghz_invariance(random_euler(rng), random_euler(rng), random_euler(rng),
                                random_euler(rng), rng.uniform(0.0, 2.0 * M_PI))
              .value < 1e-10);
  }
}

TEST_CASE("the middle angle never enters the amount") {
  RandomStream rng(86);
  EulerSU2 e1 = random_euler(rng);
  EulerSU2 e2 = random_euler(rng);
  EulerSU2 e3 = random_euler(rng);
  EulerSU2 rot = random_euler(rng);
  for (int i = 0; i < 50; ++i) {
    rot.gamma = rng.uniform(0.0, 2.0 * M_PI);
    CHECK(verify_ghz_invariance(e1, e2, e3, rot, 0.4).value < 1e-10);
  }
}

TEST_CASE("angle solving picks the canonical branch") {
  auto zero = solve_ghz_angles(0.0);
  CHECK(zero.first == 0.0);
  CHECK(zero.second == 0.0);

  auto quarter = solve_ghz_angles(M_PI / 2.0);
  CHECK(quarter.first == doctest::Approx(M_PI / 2.0));
  CHECK(quarter.second == 0.0);

  auto general = solve_ghz_angles(1.0);
  CHECK(general.first == doctest::Approx(1.0));
  Complex amount = ghz_rotation_amount(general.first, general.second, 0.9);
  CHECK(std::abs(amount - std::exp(Complex(0.0, 0.9)) * std::cos(1.0)) < 1e-12);
}

TEST_CASE("swap permutation structure") {
  Mat4 w = swap_matrix();
  CHECK((w * w - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  Mat4 paulisum = Mat4::Identity();
  paulisum += kron(pauli_x(), pauli_x());
  paulisum += kron(pauli_y(), pauli_y());
  paulisum += kron(pauli_z(), pauli_z());
  CHECK((w - 0.5 * paulisum).cwiseAbs().maxCoeff() < 1e-15);

  CHECK(std::abs(su4_swap().determinant() - Complex(1.0, 0.0)) < 1e-12);

  Vec4C singlet;
  singlet << 0.0, 1.0, -1.0, 0.0;
  singlet /= std::sqrt(2.0);
  CHECK(std::abs(singlet.dot(w * singlet) - Complex(-1.0, 0.0)) < 1e-14);
}

TEST_CASE("swap amount at the identity pair") {
  for (double x : {0.5, 0.8, 0.97}) {
    double l0 = std::sqrt(x);
    double l1 = std::sqrt(1.0 - x);
    Complex amount = swap_amount(su2_identity(), su2_identity(), l0, l1);
    CHECK(std::abs(amount - std::exp(Complex(0.0, M_PI / 4.0))) < 1e-14);
    SwapBracket b = swap_bracket(su2_identity(), su2_identity(), l0, l1);
    CHECK(b.t00 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(b.t11 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(b.psi_plus == doctest::Approx(0.0));
    CHECK(b.psi_minus == doctest::Approx(0.0));
    CHECK(b.value == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("the bracket decomposition reproduces the amount") {
  RandomStream rng(87);
  for (int i = 0; i < 1000; ++i) {
    SU2Element u = haar_su2(rng);
    SU2Element v = haar_su2(rng);
    double x = rng.uniform(0.5, 1.0);
    double l0 = std::sqrt(x);
    double l1 = std::sqrt(1.0 - x);
    SwapBracket b = swap_bracket(u, v, l0, l1);
    Complex expected = 2.0 * std::exp(Complex(0.0, M_PI / 4.0)) * b.value;
    CHECK(std::abs(swap_amount(u, v, l0, l1) - expected) < 1e-12);
    CHECK(b.value <= 0.5 + 1e-12);
    CHECK(std::abs(swap_amount(u, v, l0, l1)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("matched pairs keep the full swap amount") {
  RandomStream rng(88);
  double l0 = std::sqrt(0.8);
  double l1 = std::sqrt(0.2);
  Complex target = std::exp(Complex(0.0, M_PI / 4.0));
  for (int i = 0; i < 500; ++i) {
    LocalPair pair = sample_swap_matched(rng);
    CHECK(swap_condition(pair.u, pair.v).value < 1e-12);
    CHECK(std::abs(swap_amount(pair.u, pair.v, l0, l1) - target) < 1e-10);
  }
}

TEST_CASE("generic pairs lose swap amount magnitude") {
  RandomStream rng(89);
  double l0 = std::sqrt(0.8);
  double l1 = std::sqrt(0.2);
  int degraded = 0;
  const int n = 2000;
  for (int i = 0; i < n; ++i) {
    SU2Element u = haar_su2(rng);
    SU2Element v = haar_su2(rng);
    if (swap_condition(u, v).value > 0.0 &&
        std::abs(swap_amount(u, v, l0, l1)) < 1.0 - 1e-6) {
      ++degraded;
    }
  }
  CHECK(degraded >= n * 99 / 100);
}

TEST_CASE("component matching is not necessary for a full swap amount") {
  RandomStream rng(90);
  double l0 = std::sqrt(0.8);
  double l1 = std::sqrt(0.2);
  Complex target = std::exp(Complex(0.0, M_PI / 4.0));
  int counterexamples = 0;
  for (int i = 0; i < 500; ++i) {
    LocalPair pair = sample_swap_invariant(rng);
    CHECK(std::abs(swap_amount(pair.u, pair.v, l0, l1) - target) < 1e-10);
    if (swap_condition(pair.u, pair.v).value > 1e-3) {
      ++counterexamples;
    }
  }
  CHECK(counterexamples > 250);
}

TEST_CASE("z-rotation pairs match components and keep the amount") {
  RandomStream rng(91);
  for (int i = 0; i < 100; ++i) {
    SU2Element u = axis_rotation(Vec3::UnitZ(), rng.uniform(0.0, 2.0 * M_PI));
    SU2Element v = axis_rotation(Vec3::UnitZ(), rng.uniform(0.0, 2.0 * M_PI));
    CHECK(swap_condition(u, v).value == 0.0);
    CHECK(std::abs(swap_amount(u, v, std::sqrt(0.7), std::sqrt(0.3)) -
                   std::exp(Complex(0.0, M_PI / 4.0))) < 1e-12);
  }
}

TEST_CASE("haar unitaries are special unitary and deterministic") {
  RandomStream rng(92);
  for (int d : {2, 3, 5, 8}) {
    MatX q = haar_unitary(d, rng);
    CHECK((q.adjoint() * q - MatX::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(q.determinant() - Complex(1.0, 0.0)) < 1e-10);
  }
  RandomStream a(7);
  RandomStream b(7);
  CHECK((haar_unitary(4, a) - haar_unitary(4, b)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("special unitary validation") {
  RandomStream rng(93);
  require_special_unitary(haar_unitary(3, rng));
  CHECK_THROWS_AS(require_special_unitary(2.0 * MatX::Identity(3, 3)),
                  NotSpecialUnitary);
  MatX det_off = MatX::Identity(3, 3);
  det_off(2, 2) = std::exp(Complex(0.0, 0.4));
  CHECK_THROWS_AS(require_special_unitary(det_off), NotSpecialUnitary);
  CHECK_THROWS_AS(require_special_unitary(MatX::Identity(2, 3)), NotSpecialUnitary);
}

TEST_CASE("matrix-state overlap agrees with the flattened form") {
  RandomStream rng(94);
  for (int i = 0; i < 100; ++i) {
    MatrixState m;
    m.c.resize(3, 3);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        m.c(r, c) = Complex(rng.gaussian(), rng.gaussian());
      }
    }
    m.c /= std::sqrt(std::abs((m.c * m.c.adjoint()).trace()));
    MatX w1 = haar_unitary(3, rng);
    MatX w2 = haar_unitary(3, rng);
    VecX flat = vectorize(m);
    Complex direct = flat.dot(kron(w1, w2) * flat);
    CHECK(std::abs(dxd_overlap(w1, w2, m) - direct) < 1e-12);
  }
}

TEST_CASE("matrix-state overlap matches the two-qubit closed form at d = 2") {
  RandomStream rng(95);
  for (int i = 0; i < 100; ++i) {
    SU2Element w1 = haar_su2(rng);
    SU2Element w2 = haar_su2(rng);
    double x = rng.uniform(0.5, 1.0);
    double l0 = std::sqrt(x);
    double l1 = std::sqrt(1.0 - x);
    MatrixState m;
    m.c = Mat2::Zero();
    m.c(0, 0) = l0;
    m.c(1, 1) = l1;
    Complex via_dxd = dxd_overlap(su2_to_matrix(w1), su2_to_matrix(w2), m);
    Complex via_closed = product_overlap(w1, w2, l0, l1);
    CHECK(std::abs(via_dxd - via_closed) < 1e-13);
  }
}

TEST_CASE("equally entangled condition in higher dimensions") {
  RandomStream rng(96);
  int d = 3;

  Eigen::VectorXd dvals(d);
  dvals << 0.8, 0.5, std::sqrt(1.0 - 0.64 - 0.25);
  MatX eye = MatX::Identity(d, d);
  CHECK(dxd_condition(haar_unitary(d, rng), haar_unitary(d, rng), eye, eye, dvals)
            .value < 1e-13);

  Eigen::VectorXd maximal = Eigen::VectorXd::Constant(d, 1.0 / std::sqrt(3.0));
  for (int i = 0; i < 200; ++i) {
    MatX w1 = haar_unitary(d, rng);
    MatX u = haar_unitary(d, rng);
    MatX v = haar_unitary(d, rng);
    CHECK(dxd_condition(w1, eye, u, v, maximal).value < 1e-9);
  }
}

TEST_CASE("commuting diagonal pairs pass at any entanglement") {
  RandomStream rng(97);
  int d = 4;
  MatX eye = MatX::Identity(d, d);
  for (int i = 0; i < 200; ++i) {
    Eigen::VectorXcd diag1(d);
    Eigen::VectorXcd diag2(d);
    double total1 = 0.0;
    double total2 = 0.0;
    for (int k = 0; k + 1 < d; ++k) {
      double t1 = rng.uniform(0.0, 2.0 * M_PI);
      double t2 = rng.uniform(0.0, 2.0 * M_PI);
      total1 += t1;
      total2 += t2;
      diag1(k) = std::exp(Complex(0.0, t1));
      diag2(k) = std::exp(Complex(0.0, t2));
    }
    diag1(d - 1) = std::exp(Complex(0.0, -total1));
    diag2(d - 1) = std::exp(Complex(0.0, -total2));
    MatX w1 = diag1.asDiagonal();
    MatX u = diag2.asDiagonal();
    MatX v = haar_unitary(d, rng);

    Eigen::VectorXd dvals(d);
    for (int k = 0; k < d; ++k) {
      dvals(k) = std::abs(rng.gaussian()) + 0.1;
    }
    dvals /= dvals.norm();
    std::sort(dvals.data(), dvals.data() + d, std::greater<double>());

    CHECK(dxd_condition(w1, eye, u, v, dvals).value < 1e-10);
  }
}

TEST_CASE("dimension and input validation for the general condition") {
  RandomStream rng(98);
  MatX eye2 = MatX::Identity(2, 2);
  Eigen::VectorXd good(2);
  good << std::sqrt(0.8), std::sqrt(0.2);

  Eigen::VectorXd too_long(9);
  too_long.setConstant(1.0 / 3.0);
  CHECK_THROWS_AS(dxd_condition(MatX::Identity(9, 9), MatX::Identity(9, 9),
                                MatX::Identity(9, 9), MatX::Identity(9, 9), too_long),
                  DimensionMismatch);

  CHECK_THROWS_AS(dxd_condition(MatX::Identity(3, 3), eye2, eye2, eye2, good),
                  DimensionMismatch);

  CHECK_THROWS_AS(dxd_condition(2.0 * eye2, eye2, eye2, eye2, good),
                  NotSpecialUnitary);

  Eigen::VectorXd ascending(2);
  ascending << std::sqrt(0.2), std::sqrt(0.8);
  CHECK_THROWS_AS(dxd_condition(eye2, eye2, eye2, eye2, ascending), BadSchmidtPair);

  Eigen::VectorXd unnormalized(2);
  unnormalized << 0.9, 0.1;
  CHECK_THROWS_AS(dxd_condition(eye2, eye2, eye2, eye2, unnormalized), BadSchmidtPair);
}

}  // TEST_SUITE
