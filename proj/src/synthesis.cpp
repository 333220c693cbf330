#include "qfunc/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qfunc {

int ancilla_count(int m) {
    if (m < 1) {
        throw PreconditionError("ancilla_count: m must be >= 1");
    }
    int mu = 0;
    while ((1 << mu) < m) ++mu;
    return mu;
}

CoefficientVector interp_coefficients(const FunctionSpec& f, int m, Complex tau) {
    const auto roots = binomial_roots(m, tau);

    std::vector<Complex> values(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const Complex v = f.evaluate(roots[static_cast<std::size_t>(k)]);
        if (std::abs(std::abs(v) - 1.0) > kUnimodularTol) {
            std::ostringstream os;
            os << "interp_coefficients: |f(" << format_complex(roots[static_cast<std::size_t>(k)])
               << ")| = " << std::abs(v) << ", not on the unit circle";
            throw DomainError(os.str());
        }
        values[static_cast<std::size_t>(k)] = v;
    }

    // Inverse discrete Fourier transform of the samples, de-scaled by the
    // principal root: alpha_i = rho^{-i} (1/m) sum_k f(rho w^k) w^{-ik}.
    const double base = std::arg(tau);
    CoefficientVector out;
    out.m = m;
    out.tau = tau / std::abs(tau);
    out.alpha.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Complex acc{0.0};
        for (int k = 0; k < m; ++k) {
            const double angle = -2.0 * std::numbers::pi * i * k / m;
            acc += values[static_cast<std::size_t>(k)] * Complex{std::cos(angle), std::sin(angle)};
        }
        acc /= static_cast<double>(m);
        const double descale = -base * i / m;
        out.alpha[static_cast<std::size_t>(i)] = acc * Complex{std::cos(descale), std::sin(descale)};
    }
    return out;
}

CMatrix companion_matrix(const Polynomial& mpoly) {
    if (!mpoly.is_monic()) {
        throw FormError("companion_matrix: polynomial must be monic");
    }
    const int m = mpoly.degree();
    if (m < 1) {
        throw FormError("companion_matrix: polynomial must have degree >= 1");
    }
    CMatrix p = CMatrix::Zero(m, m);
    for (int i = 0; i + 1 < m; ++i) {
        p(i, i + 1) = 1.0;
    }
    for (int j = 0; j < m; ++j) {
        p(m - 1, j) = -mpoly.coeff(j);  // g_j with m(x) = x^m - g(x)
    }
    return p;
}

CMatrix coefficient_matrix(const CoefficientVector& alpha, const CMatrix& companion) {
    const int m = alpha.m;
    if (companion.rows() != m || companion.cols() != m ||
        static_cast<int>(alpha.alpha.size()) != m) {
        throw DimensionError("coefficient_matrix: alpha length must match companion dimension");
    }
    CMatrix c(m, m);
    Eigen::RowVectorXcd row(m);
    for (int j = 0; j < m; ++j) row(j) = alpha.alpha[static_cast<std::size_t>(j)];
    for (int k = 0; k < m; ++k) {
        c.row(k) = row;
        row = row * companion;
    }
    return c;
}

CMatrix pad_to_register(const CMatrix& c, int mu) {
    const int m = static_cast<int>(c.rows());
    if (c.rows() != c.cols()) {
        throw DimensionError("pad_to_register: matrix must be square");
    }
    const int dim = 1 << mu;
    if (m > dim || (mu > 0 && m <= (1 << (mu - 1)))) {
        throw DimensionError("pad_to_register: need 2^(mu-1) < m <= 2^mu");
    }
    CMatrix out = CMatrix::Identity(dim, dim);
    out.topLeftCorner(m, m) = c;
    return out;
}

CMatrix superposition_prep(int m, int mu) {
    const int dim = 1 << mu;
    if (m < 1 || m > dim || (mu > 0 && m <= (1 << (mu - 1)))) {
        throw DimensionError("superposition_prep: need 2^(mu-1) < m <= 2^mu");
    }
    CVector target = CVector::Zero(dim);
    for (int i = 0; i < m; ++i) target[i] = 1.0 / std::sqrt(static_cast<double>(m));

    CVector v = CVector::Zero(dim);
    v[0] = 1.0;
    v -= target;
    const double vnorm2 = v.squaredNorm();
    if (vnorm2 < 1e-30) {
        return CMatrix::Identity(dim, dim);
    }
    return CMatrix::Identity(dim, dim) - (2.0 / vnorm2) * (v * v.adjoint());
}

LemmaReport unitarity_lemma_check(const CoefficientVector& alpha) {
    const int m = alpha.m;
    const auto& a = alpha.alpha;
    const Complex tau_bar = std::conj(alpha.tau);

    LemmaReport report;
    report.inners.resize(static_cast<std::size_t>(m));
    for (int row = 0; row < m; ++row) {
        Complex inner{0.0};
        for (int j = 0; j < row; ++j) {
            inner += tau_bar * std::conj(a[static_cast<std::size_t>((j - row + m) % m)]) *
                     a[static_cast<std::size_t>(j)];
        }
        for (int j = row; j < m; ++j) {
            inner += std::conj(a[static_cast<std::size_t>(j - row)]) * a[static_cast<std::size_t>(j)];
        }
        report.inners[static_cast<std::size_t>(row)] = inner;
        if (row == 0) {
            report.max_row_norm_deviation = std::abs(inner - Complex{1.0});
        } else {
            report.max_offdiag_inner = std::max(report.max_offdiag_inner, std::abs(inner));
        }
    }
    return report;
}

LimitationReport limitation_demo(const CMatrix& u, double tol) {
    const Polynomial mpoly = minimal_polynomial(u, tol);
    const int m = mpoly.degree();

    // m(x) = x^m - g(x); g_i = -coeff_i for i < m.
    std::vector<Complex> g_coeffs(static_cast<std::size_t>(m), Complex{0.0});
    for (int i = 0; i < m; ++i) {
        g_coeffs[static_cast<std::size_t>(i)] = -mpoly.coeff(i);
    }
    Polynomial g{std::vector<Complex>(g_coeffs)};
    if (g.degree() < 1 || std::abs(g.coeff(g.degree())) <= tol) {
        throw NotApplicableError(
            "limitation_demo: minimal polynomial is binomial, the coefficient matrix stays unitary");
    }

    // V = U^m = g(U): the combination coefficients are g's own coefficients.
    CoefficientVector alpha{g_coeffs, m, Complex{1.0}};
    const CMatrix c = coefficient_matrix(alpha, companion_matrix(mpoly));
    const double norm_sq = c.row(0).squaredNorm();

    LimitationReport report{mpoly, std::move(g), norm_sq};
    return report;
}

ExtensionResult extend_to_binomial(const CMatrix& u, int m, double tol) {
    const auto tau = scalar_power_check(u, m, tol);
    if (!tau) {
        std::ostringstream os;
        os << "extend_to_binomial: U^" << m << " is not a scalar matrix";
        throw PreconditionError(os.str());
    }

    ExtensionResult out;
    out.tau = *tau / std::abs(*tau);
    out.nodes = binomial_roots(m, out.tau);

    const Spectrum spec = eigendecompose_unitary(u, tol);
    std::vector<Complex> missing;
    for (Complex node : out.nodes) {
        bool present = false;
        for (Complex lambda : spec.cluster_values) {
            if (std::abs(node - lambda) <= kNodeTol) {
                present = true;
                break;
            }
        }
        if (!present) missing.push_back(node);
    }
    out.m2 = Polynomial::from_roots(missing);

    const auto n = u.rows();
    const auto extra = static_cast<Eigen::Index>(missing.size());
    out.block_witness = CMatrix::Zero(n + extra, n + extra);
    out.block_witness.topLeftCorner(n, n) = u;
    for (Eigen::Index i = 0; i < extra; ++i) {
        out.block_witness(n + i, n + i) = missing[static_cast<std::size_t>(i)];
    }
    return out;
}

SynthesisBundle bundle_from_coefficients(const CoefficientVector& alpha) {
    SynthesisBundle bundle;
    bundle.m = alpha.m;
    bundle.ancillas = ancilla_count(alpha.m);
    bundle.tau = alpha.tau;
    bundle.coeffs = alpha;

    std::vector<Complex> mono(static_cast<std::size_t>(alpha.m) + 1, Complex{0.0});
    mono[0] = -alpha.tau;
    mono.back() = Complex{1.0};
    bundle.companion = companion_matrix(Polynomial{std::move(mono)});
    bundle.coeff_matrix = coefficient_matrix(alpha, bundle.companion);
    bundle.ancilla_matrix = pad_to_register(bundle.coeff_matrix, bundle.ancillas);
    bundle.prep_matrix = superposition_prep(bundle.m, bundle.ancillas);
    return bundle;
}

std::optional<int> detect_scalar_power(const CMatrix& u, int max_m, double tol) {
    if (!is_unitary(u, tol)) {
        throw PreconditionError("detect_scalar_power: input is not unitary");
    }
    const auto n = u.rows();
    CMatrix w = CMatrix::Identity(n, n);
    for (int m = 1; m <= max_m; ++m) {
        w = w * u;
        const Complex tau = w(0, 0);
        if (max_abs(CMatrix(w - tau * CMatrix::Identity(n, n))) <= tol) {
            return m;
        }
    }
    return std::nullopt;
}

SynthesisBundle synthesize(const CMatrix& u, const FunctionSpec& f, int m, double tol) {
    const auto tau = scalar_power_check(u, m, tol);
    if (!tau) {
        std::ostringstream os;
        os << "synthesize: U^" << m << " is not a scalar matrix";
        if (auto better = detect_scalar_power(u, 64, tol)) {
            os << " (smallest working power is m=" << *better << ")";
        }
        throw PreconditionError(os.str());
    }
    return bundle_from_coefficients(interp_coefficients(f, m, *tau / std::abs(*tau)));
}

}  // namespace qfunc
