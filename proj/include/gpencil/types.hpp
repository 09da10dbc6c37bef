#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace gpencil {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using BigIntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;
using RealMatrix = Eigen::MatrixXd;

// Error hierarchy. The CLI maps every subclass except Internal to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSet : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class UnsupportedSet : public Error {
 public:
  using Error::Error;
};

/// Raised when an exact computation produces a result that contradicts
/// its own invariants (e.g. an inexact division that must be exact).
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

/// Entrywise conversion of an exact matrix to double precision.
template <typename Derived>
RealMatrix to_real(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return m.unaryExpr([](const Scalar& x) {
    if constexpr (std::is_arithmetic_v<Scalar>) {
      return static_cast<double>(x);
    } else {
      return x.template convert_to<double>();
    }
  });
}

}  // namespace gpencil
