#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace equirot {

using Complex = std::complex<double>;
using Vec2C = Eigen::Vector2cd;
using Vec3 = Eigen::Vector3d;
using Vec4C = Eigen::Vector4cd;
using Mat2 = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

// Default tolerance for residual-valued predicates.
constexpr double kPredicateTol = 1e-9;
// Tighter tolerance for exact algebraic identities.
constexpr double kAlgebraTol = 1e-12;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotSpecialUnitary : public Error {
 public:
  explicit NotSpecialUnitary(const std::string& msg) : Error(msg) {}
};

class BadSchmidtPair : public Error {
 public:
  explicit BadSchmidtPair(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class NotOnCircle : public Error {
 public:
  explicit NotOnCircle(const std::string& msg) : Error(msg) {}
};

class NotOrthonormal : public Error {
 public:
  explicit NotOrthonormal(const std::string& msg) : Error(msg) {}
};

class BadProbability : public Error {
 public:
  explicit BadProbability(const std::string& msg) : Error(msg) {}
};

class AmountOutOfRange : public Error {
 public:
  explicit AmountOutOfRange(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

// A nonnegative residual paired with the tolerance it was checked against.
struct ConditionResidual {
  double value = 0.0;
  double tolerance = kPredicateTol;

  bool holds() const { return value <= tolerance; }
};

}  // namespace equirot
