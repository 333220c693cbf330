#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace qfunc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Tolerance used whenever a caller does not override one.
inline constexpr double kDefaultTol = 1e-10;

/// Two eigenvalues closer than this on the unit circle are treated as one.
inline constexpr double kClusterTol = 1e-7;

/// Allowed deviation of |f(root)| from 1 before synthesis refuses a function.
inline constexpr double kUnimodularTol = 1e-8;

/// Matching distance between a query point and an interpolation node.
inline constexpr double kNodeTol = 1e-6;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NumericError : Error { using Error::Error; };
struct ResourceError : Error { using Error::Error; };
struct FormError : Error { using Error::Error; };
struct ConsistencyError : Error { using Error::Error; };
struct NotApplicableError : Error { using Error::Error; };

/// Largest entry magnitude, the norm used by every residual check.
inline double max_abs(const CMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const CVector& v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

/// Residual of unitarity, max |U^dag U - I|.
inline double unitarity_residual(const CMatrix& m) {
    return max_abs(CMatrix(m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())));
}

std::string format_complex(Complex z, double display_eps = 1e-9);

}  // namespace qfunc
