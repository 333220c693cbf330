#include "qfunc/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qfunc {

bool is_unitary(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) {
        throw DimensionError("is_unitary: matrix must be square");
    }
    if (tol <= 0.0) {
        throw PreconditionError("is_unitary: tolerance must be positive");
    }
    return unitarity_residual(m) <= tol;
}

CMatrix unitary_power(const CMatrix& u, long long k) {
    if (u.rows() != u.cols()) {
        throw DimensionError("unitary_power: matrix must be square");
    }
    const auto n = u.rows();
    if (k < 0) {
        return unitary_power(CMatrix(u.adjoint()), -k);
    }
    CMatrix result = CMatrix::Identity(n, n);
    CMatrix base = u;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

namespace {

void require_unitary(const CMatrix& u, double tol, const char* who) {
    if (!is_unitary(u, tol)) {
        std::ostringstream os;
        os << who << ": input is not unitary (residual " << unitarity_residual(u) << ")";
        throw PreconditionError(os.str());
    }
}

// Splits sorted real values into groups separated by gaps larger than tol.
std::vector<std::pair<int, int>> gap_groups(const Eigen::VectorXd& sorted, double tol) {
    std::vector<std::pair<int, int>> groups;
    int start = 0;
    for (int i = 1; i < sorted.size(); ++i) {
        if (sorted[i] - sorted[i - 1] > tol) {
            groups.emplace_back(start, i);
            start = i;
        }
    }
    groups.emplace_back(start, static_cast<int>(sorted.size()));
    return groups;
}

}  // namespace

Spectrum eigendecompose_unitary(const CMatrix& u, double tol) {
    require_unitary(u, tol, "eigendecompose_unitary");
    const auto n = u.rows();

    // U = X + iY with X, Y commuting Hermitian parts. Diagonalizing X and
    // then Y inside each eigenspace of X gives an orthonormal eigenbasis of
    // U even when eigenvalues are degenerate, which a general complex
    // eigensolver does not guarantee.
    const CMatrix x = 0.5 * (u + u.adjoint());
    const CMatrix y = Complex{0.0, -0.5} * (u - u.adjoint());

    Eigen::SelfAdjointEigenSolver<CMatrix> sx(x);
    if (sx.info() != Eigen::Success) {
        throw NumericError("eigendecompose_unitary: eigensolver failed on the Hermitian part");
    }
    CMatrix basis = sx.eigenvectors();

    for (auto [lo, hi] : gap_groups(sx.eigenvalues(), kClusterTol)) {
        const int len = hi - lo;
        if (len == 1) continue;
        const CMatrix sub = basis.middleCols(lo, len);
        Eigen::SelfAdjointEigenSolver<CMatrix> sy(CMatrix(sub.adjoint() * y * sub));
        if (sy.info() != Eigen::Success) {
            throw NumericError("eigendecompose_unitary: eigensolver failed on a subspace");
        }
        basis.middleCols(lo, len) = sub * sy.eigenvectors();
    }

    Spectrum spec;
    spec.basis = std::move(basis);
    spec.eigenvalues.resize(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        spec.eigenvalues[j] = spec.basis.col(j).dot(u * spec.basis.col(j));
    }

    // Cluster by angle, merging across the branch cut.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::arg(spec.eigenvalues[a]) < std::arg(spec.eigenvalues[b]);
    });
    std::vector<std::vector<int>> clusters;
    for (int idx : order) {
        if (!clusters.empty() &&
            std::abs(spec.eigenvalues[clusters.back().back()] - spec.eigenvalues[idx]) <= kClusterTol) {
            clusters.back().push_back(idx);
        } else {
            clusters.push_back({idx});
        }
    }
    if (clusters.size() > 1) {
        const Complex first = spec.eigenvalues[clusters.front().front()];
        const Complex last = spec.eigenvalues[clusters.back().back()];
        if (std::abs(first - last) <= kClusterTol) {
            auto& front = clusters.front();
            front.insert(front.end(), clusters.back().begin(), clusters.back().end());
            clusters.pop_back();
        }
    }
    spec.clusters = std::move(clusters);
    spec.cluster_values.reserve(spec.clusters.size());
    for (const auto& cluster : spec.clusters) {
        Complex mean{0.0};
        for (int idx : cluster) mean += spec.eigenvalues[idx];
        mean /= static_cast<double>(cluster.size());
        spec.cluster_values.push_back(mean / std::abs(mean));
    }
    return spec;
}

Polynomial minimal_polynomial(const CMatrix& u, double tol) {
    const Spectrum spec = eigendecompose_unitary(u, tol);
    return Polynomial::from_roots(spec.cluster_values);
}

std::optional<Complex> scalar_power_check(const CMatrix& u, int m, double tol) {
    require_unitary(u, tol, "scalar_power_check");
    if (m < 1) {
        throw PreconditionError("scalar_power_check: m must be >= 1");
    }
    const CMatrix w = unitary_power(u, m);
    const Complex tau = w(0, 0);
    const double residual = max_abs(CMatrix(w - tau * CMatrix::Identity(w.rows(), w.cols())));
    if (residual > tol) return std::nullopt;
    return tau;
}

CMatrix spectral_function_oracle(const CMatrix& u, const FunctionSpec& f, double tol) {
    const Spectrum spec = eigendecompose_unitary(u, tol);
    const auto n = u.rows();
    CVector mapped(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        mapped[j] = f.evaluate(spec.eigenvalues[j]);
    }
    return spec.basis * mapped.asDiagonal() * spec.basis.adjoint();
}

}  // namespace qfunc
