// mpsemi/types.h

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef MPSEMI_TYPES_H_
#define MPSEMI_TYPES_H_

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mpsemi {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

// Default relative Frobenius tolerance for algebraic identities.
inline constexpr double kDefaultTol = 1e-10;
// Eigenvalue margin factor for positivity, scaled by ||M_S||_2.
inline constexpr double kPositivityMargin = 1e-9;

// Error taxonomy.  The CLI maps these onto exit codes:
// ValidationError -> 1, IoError -> 2, NumericalError (and subclasses) -> 3.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string &what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string &code() const { return code_; }

 private:
  std::string code_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

// Declared-unsupported configurations (degenerate decompositions, exotic
// rescalings on 2-d grids, singular blocks).  Treated as numerical failures.
class UnsupportedError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mpsemi

#endif  // MPSEMI_TYPES_H_
