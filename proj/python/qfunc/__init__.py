"""Quantum circuits for functions of a unitary.

Given a unitary U with U**m equal to a scalar, builds the generic circuit
realizing f(U) as a linear combination of powers of U, and verifies it by
statevector simulation against a spectral reference.
"""

from ._core import (
    Circuit,
    CoefficientVector,
    FunctionSpec,
    SynthesisBundle,
    assemble_generic,
    binomial_roots,
    bundle_from_coefficients,
    coefficient_matrix,
    companion_matrix,
    controlled_power_block,
    cost_estimate,
    detect_scalar_power,
    eigendecompose_unitary,
    extend_to_binomial,
    frft_apply,
    frft_circuit,
    frft_coefficients,
    interp_coefficients,
    is_unitary,
    limitation_demo,
    minimal_polynomial,
    pad_to_register,
    qft_circuit,
    scalar_power_check,
    spectral_function_oracle,
    superposition_prep,
    synthesize,
    two_level_decompose,
    unitarity_lemma_check,
    unitary_power,
    verify,
)

__all__ = [
    "Circuit",
    "CoefficientVector",
    "FunctionSpec",
    "SynthesisBundle",
    "assemble_generic",
    "binomial_roots",
    "bundle_from_coefficients",
    "coefficient_matrix",
    "companion_matrix",
    "controlled_power_block",
    "cost_estimate",
    "detect_scalar_power",
    "eigendecompose_unitary",
    "extend_to_binomial",
    "frft_apply",
    "frft_circuit",
    "frft_coefficients",
    "interp_coefficients",
    "is_unitary",
    "limitation_demo",
    "minimal_polynomial",
    "pad_to_register",
    "qft_circuit",
    "scalar_power_check",
    "spectral_function_oracle",
    "superposition_prep",
    "synthesize",
    "two_level_decompose",
    "unitarity_lemma_check",
    "unitary_power",
    "verify",
]
