#pragma once

#include "qfunc/circuit.hpp"
#include "qfunc/synthesis.hpp"
#include "qfunc/types.hpp"

namespace qfunc {

struct FrftParams {
    int n;     // system qubit count
    double x;  // transform angle in radians; x = pi/2 gives the plain DFT
};

/// Closed-form combination coefficients of the fractional Fourier
/// transform, 2 pi periodic in x (m = 4, tau = 1).
CoefficientVector frft_coefficients(double x);

/// Generic circuit realizing the fractional transform on n system qubits
/// with two ancillas.
Circuit frft_circuit(int n, double x);

/// Applies the fractional transform by simulating the generic circuit and
/// reading back the system register.
CVector frft_apply(const FrftParams& params, const CVector& psi);

}  // namespace qfunc
