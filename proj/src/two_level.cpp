#include "qfunc/two_level.hpp"

#include "qfunc/spectral.hpp"

#include <cmath>

namespace qfunc {

namespace {

constexpr int kDimLimit = 16;
constexpr double kNegligible = 1e-14;

}  // namespace

CMatrix TwoLevelUnitary::expand(int dim) const {
    CMatrix m = CMatrix::Identity(dim, dim);
    m(i, i) = block(0, 0);
    m(i, j) = block(0, 1);
    m(j, i) = block(1, 0);
    m(j, j) = block(1, 1);
    return m;
}

std::vector<TwoLevelUnitary> two_level_decompose(const CMatrix& w, double tol) {
    if (w.rows() != w.cols()) {
        throw DimensionError("two_level_decompose: matrix must be square");
    }
    const int dim = static_cast<int>(w.rows());
    if (dim < 2) {
        throw DimensionError("two_level_decompose: dimension must be >= 2");
    }
    if (dim > kDimLimit) {
        throw ResourceError("two_level_decompose: dimension exceeds the supported limit");
    }
    if (!is_unitary(w, tol)) {
        throw PreconditionError("two_level_decompose: matrix is not unitary");
    }

    // Eliminate below-diagonal entries with rotations on adjacent rows.
    // G_K ... G_1 W = D, so W = G_1^dag ... G_K^dag D.
    CMatrix r = w;
    std::vector<TwoLevelUnitary> factors;
    for (int col = 0; col + 1 < dim; ++col) {
        for (int row = dim - 1; row > col; --row) {
            const Complex a = r(row - 1, col);
            const Complex b = r(row, col);
            if (std::abs(b) <= kNegligible) continue;
            const double norm = std::sqrt(std::norm(a) + std::norm(b));
            Eigen::Matrix2cd g;
            g << std::conj(a) / norm, std::conj(b) / norm, -b / norm, a / norm;
            r({row - 1, row}, Eigen::all) = (g * r({row - 1, row}, Eigen::all)).eval();
            factors.push_back(TwoLevelUnitary{row - 1, row, g.adjoint()});
        }
    }

    // Fold the leftover diagonal phases into the last factor touching the
    // same index; phases on untouched indices become degenerate factors.
    for (int idx = dim - 1; idx >= 0; --idx) {
        const Complex phase = r(idx, idx);
        if (std::abs(phase - Complex{1.0}) <= kNegligible) continue;
        bool folded = false;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            if (it->i == idx) {
                it->block.col(0) *= phase;
                folded = true;
                break;
            }
            if (it->j == idx) {
                it->block.col(1) *= phase;
                folded = true;
                break;
            }
        }
        if (!folded) {
            Eigen::Matrix2cd block = Eigen::Matrix2cd::Identity();
            const int partner = idx > 0 ? idx - 1 : idx + 1;
            if (partner < idx) {
                block(1, 1) = phase;
                factors.push_back(TwoLevelUnitary{partner, idx, block});
            } else {
                block(0, 0) = phase;
                factors.push_back(TwoLevelUnitary{idx, partner, block});
            }
        }
    }
    return factors;
}

CMatrix two_level_product(const std::vector<TwoLevelUnitary>& factors, int dim) {
    CMatrix m = CMatrix::Identity(dim, dim);
    for (const auto& f : factors) {
        m = m * f.expand(dim);
    }
    return m;
}

}  // namespace qfunc
