#pragma once

#include "qfunc/function_spec.hpp"
#include "qfunc/polynomial.hpp"
#include "qfunc/types.hpp"

#include <optional>
#include <vector>

namespace qfunc {

/// Eigensystem of a unitary matrix. The basis columns are orthonormal and
/// basis^dag * U * basis is diagonal; eigenvalues sit on the unit circle.
struct Spectrum {
    CVector eigenvalues;
    CMatrix basis;
    /// Eigenvalue indices grouped so that two indices share a group iff
    /// their eigenvalues coincide within the cluster tolerance.
    std::vector<std::vector<int>> clusters;
    /// One representative per cluster: the member mean pulled back to the
    /// unit circle.
    std::vector<Complex> cluster_values;
};

bool is_unitary(const CMatrix& m, double tol = kDefaultTol);

/// U^k by repeated squaring; negative k uses the adjoint (U assumed unitary).
CMatrix unitary_power(const CMatrix& u, long long k);

Spectrum eigendecompose_unitary(const CMatrix& u, double tol = kDefaultTol);

/// Monic product of (x - lambda) over the distinct eigenvalue clusters.
Polynomial minimal_polynomial(const CMatrix& u, double tol = kDefaultTol);

/// If U^m = tau * I within tol, returns tau (unimodular); otherwise empty.
std::optional<Complex> scalar_power_check(const CMatrix& u, int m, double tol = kDefaultTol);

/// Reference implementation of the matrix function: diagonalize, apply f
/// to each eigenvalue, transform back.
CMatrix spectral_function_oracle(const CMatrix& u, const FunctionSpec& f, double tol = kDefaultTol);

}  // namespace qfunc
