#pragma once

#include "qfunc/types.hpp"

#include <vector>

namespace qfunc {

/// Unitary acting on exactly two basis indices i < j, identity elsewhere.
struct TwoLevelUnitary {
    int i;
    int j;
    Eigen::Matrix2cd block;

    CMatrix expand(int dim) const;
};

/// Factors a unitary into two-level (Givens-type) unitaries whose ordered
/// product reproduces it: at most dim(dim-1)/2 rotations, with the residual
/// diagonal phases folded into the factors that touch the same indices.
std::vector<TwoLevelUnitary> two_level_decompose(const CMatrix& w, double tol = kDefaultTol);

CMatrix two_level_product(const std::vector<TwoLevelUnitary>& factors, int dim);

}  // namespace qfunc
