#pragma once

#include "qfunc/function_spec.hpp"
#include "qfunc/polynomial.hpp"
#include "qfunc/spectral.hpp"
#include "qfunc/types.hpp"

#include <optional>
#include <vector>

namespace qfunc {

/// Combination coefficients alpha_0..alpha_{m-1} of a linear combination of
/// matrix powers, interpolating a function on the roots of x^m - tau.
struct CoefficientVector {
    std::vector<Complex> alpha;
    int m = 0;
    Complex tau{1.0};
};

/// Row inner products of the coefficient matrix evaluated directly from
/// alpha, compared against the orthonormality target.
struct LemmaReport {
    double max_row_norm_deviation = 0.0;  // | <row0|row0> - 1 |
    double max_offdiag_inner = 0.0;       // max_a>0 | <row a|row 0> |
    std::vector<Complex> inners;          // <row a|row 0> for a = 0..m-1
};

struct LimitationReport {
    Polynomial mpoly;            // x^m - g(x)
    Polynomial g;                // the non-constant remainder part
    double first_row_norm_sq;    // sum |g_i|^2, greater than 1 in this case
};

struct ExtensionResult {
    Complex tau{1.0};
    std::vector<Complex> nodes;  // all m interpolation nodes, roots of x^m - tau
    Polynomial m2;               // cofactor with x^m - tau = minpoly * m2
    CMatrix block_witness;       // diag(U, A), minimal polynomial x^m - tau; test-only
};

/// Everything the generic circuit needs for one synthesis target.
struct SynthesisBundle {
    int m = 0;
    int ancillas = 0;  // smallest count with m register states available
    Complex tau{1.0};
    CoefficientVector coeffs;
    CMatrix companion;       // m x m
    CMatrix coeff_matrix;    // m x m, row k recombines the k-th power
    CMatrix ancilla_matrix;  // 2^ancillas square, coeff_matrix padded by identity
    CMatrix prep_matrix;     // 2^ancillas square, column 0 is the flat superposition
};

/// Smallest mu with 2^(mu-1) < m <= 2^mu (0 for m = 1).
int ancilla_count(int m);

/// Interpolation coefficients alpha with sum_i alpha_i r^i = f(r) at every
/// root r of x^m - tau. Rejects functions whose node values leave the unit
/// circle, which would make the downstream matrices non-unitary.
CoefficientVector interp_coefficients(const FunctionSpec& f, int m, Complex tau);

/// Companion matrix of a monic polynomial x^m - g(x): super-diagonal ones,
/// bottom row the coefficients of g.
CMatrix companion_matrix(const Polynomial& mpoly);

/// Matrix whose row k is the row vector alpha * companion^k.
CMatrix coefficient_matrix(const CoefficientVector& alpha, const CMatrix& companion);

/// Pads an m x m matrix to the full 2^mu ancilla register, identity on the
/// unused basis states.
CMatrix pad_to_register(const CMatrix& c, int mu);

/// Deterministic unitary whose first column is (1/sqrt m)(1..1,0..0)^t,
/// built as a Householder reflection.
CMatrix superposition_prep(int m, int mu);

/// Evaluates the row inner products of the coefficient matrix directly from
/// alpha, without building the matrix.
LemmaReport unitarity_lemma_check(const CoefficientVector& alpha);

/// For a unitary whose minimal polynomial x^m - g(x) has non-constant g:
/// the first row of the coefficient matrix for V = U^m has squared norm
/// sum |g_i|^2 > 1, so no unitary register operation exists on this route.
LimitationReport limitation_demo(const CMatrix& u, double tol = kDefaultTol);

/// For U with U^m scalar: the interpolation nodes over all roots of
/// x^m - tau, the cofactor polynomial, and a block-diagonal witness whose
/// minimal polynomial is exactly x^m - tau.
ExtensionResult extend_to_binomial(const CMatrix& u, int m, double tol = kDefaultTol);

/// Builds the full bundle from combination coefficients alone.
SynthesisBundle bundle_from_coefficients(const CoefficientVector& alpha);

/// Smallest m <= max_m with U^m scalar, if any.
std::optional<int> detect_scalar_power(const CMatrix& u, int max_m = 64, double tol = kDefaultTol);

/// Interpolates f on the roots of x^m - tau (tau from U^m) and assembles
/// the bundle for U.
SynthesisBundle synthesize(const CMatrix& u, const FunctionSpec& f, int m, double tol = kDefaultTol);

}  // namespace qfunc
