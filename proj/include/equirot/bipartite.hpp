#pragma once

#include "equirot/su2.hpp"
#include "equirot/types.hpp"

namespace equirot {

// Two-qubit pure state, amplitudes ordered |00>, |01>, |10>, |11>.
struct PureState2Q {
  Vec4C amp = Vec4C::Zero();

  double norm() const { return amp.norm(); }
};

struct SchmidtForm {
  double l0 = 1.0;
  double l1 = 0.0;
  SU2Element u;
  SU2Element v;
};

// d x d coefficient matrix C with Tr[C C^dag] = 1; |state> = sum_ij C_ij |ij>.
struct MatrixState {
  MatX c;

  int dim() const { return static_cast<int>(c.rows()); }
};

MatX kron(const MatX& a, const MatX& b);

// l0|00> + l1|11>; requires l0 >= l1 >= 0 and l0^2 + l1^2 = 1 within 1e-9.
PureState2Q make_psi0(double l0, double l1);

// Entanglement entropy -l0^2 log2 l0^2 - l1^2 log2 l1^2, with 0 log 0 = 0.
double entanglement(double l0, double l1);

PureState2Q apply_local(const SU2Element& u, const SU2Element& v,
                        const PureState2Q& s);

Complex overlap(const PureState2Q& s, const Mat4& op);

// Schmidt form with l0 >= l1 and det-1 local factors, phases fixed so each
// factor's (0,0) entry has nonnegative real part (ties broken by the
// imaginary part, then the (1,0) entry). Reconstructs the input up to a
// global phase.
SchmidtForm schmidt_decompose(const PureState2Q& s);

VecX vectorize(const MatrixState& m);
// Inverse of vectorize; throws DimensionMismatch unless the length is a
// perfect square.
MatrixState devectorize(const VecX& amp);

// (U (x) V)|C>> = |U C V^T>>; dimensions must agree.
MatrixState apply_local(const MatX& u, const MatX& v, const MatrixState& m);

}  // namespace equirot
