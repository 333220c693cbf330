#pragma once

#include "qfunc/types.hpp"

#include <cmath>
#include <numbers>

namespace qfunc::testing {

/// Discrete Fourier transform on n qubits straight from its defining
/// formula, 2^{-n/2} exp(-2 pi i kl / 2^n). This is the reference every
/// circuit-built transform is compared against.
inline CMatrix dft_matrix(int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    CMatrix f(dim, dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (Eigen::Index k = 0; k < dim; ++k) {
        for (Eigen::Index l = 0; l < dim; ++l) {
            const double angle =
                -2.0 * std::numbers::pi * static_cast<double>(k * l) / static_cast<double>(dim);
            f(k, l) = scale * Complex{std::cos(angle), std::sin(angle)};
        }
    }
    return f;
}

inline double diff(const CMatrix& a, const CMatrix& b) { return max_abs(CMatrix(a - b)); }

inline double diff(const CVector& a, const CVector& b) { return max_abs(CVector(a - b)); }

}  // namespace qfunc::testing
