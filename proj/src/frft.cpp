#include "qfunc/frft.hpp"

#include <cmath>

namespace qfunc {

CoefficientVector frft_coefficients(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("frft_coefficients: angle must be finite");
    }
    const Complex e = std::polar(1.0, x);
    const Complex i{0.0, 1.0};
    const double c = std::cos(x);
    const double s = std::sin(x);

    CoefficientVector out;
    out.m = 4;
    out.tau = Complex{1.0};
    out.alpha = {
        0.5 * (1.0 + e) * c,
        0.5 * (1.0 - i * e) * s,
        0.5 * (-1.0 + e) * c,
        0.5 * (-1.0 - i * e) * s,
    };
    return out;
}

Circuit frft_circuit(int n, double x) {
    const CMatrix f_n = circuit_to_matrix(qft_circuit(n));
    return assemble_generic(bundle_from_coefficients(frft_coefficients(x)), f_n);
}

CVector frft_apply(const FrftParams& params, const CVector& psi) {
    const Eigen::Index dim = Eigen::Index{1} << params.n;
    if (psi.size() != dim) {
        throw DimensionError("frft_apply: state dimension must be 2^n");
    }
    const Circuit c = frft_circuit(params.n, params.x);

    CVector input = CVector::Zero(Eigen::Index{1} << c.width());
    input.head(dim) = psi;
    const CVector output = simulate(c, input);
    return output.head(dim);
}

}  // namespace qfunc
