"""Smoke tests for the Python bindings."""

import math

import numpy as np
import pytest

import qfunc


def dft(n):
    dim = 2**n
    k, l = np.meshgrid(np.arange(dim), np.arange(dim), indexing="ij")
    return np.exp(-2j * np.pi * k * l / dim) / math.sqrt(dim)


def test_qft_circuit_matches_definition():
    circuit = qfunc.qft_circuit(3)
    assert circuit.width == 3
    assert circuit.gate_count == 7
    assert np.abs(circuit.to_matrix() - dft(3)).max() < 1e-9


def test_minimal_polynomial_of_the_transform():
    coeffs = np.asarray(qfunc.minimal_polynomial(dft(3)))
    assert np.abs(coeffs - np.array([-1, 0, 0, 0, 1])).max() < 1e-8


def test_scalar_power_detection():
    assert qfunc.detect_scalar_power(dft(3)) == 4
    tau = qfunc.scalar_power_check(dft(3), 4)
    assert abs(tau - 1) < 1e-10
    assert qfunc.scalar_power_check(dft(3), 3) is None


def test_frft_coefficients_at_quarter_period():
    alpha = np.asarray(qfunc.frft_coefficients(math.pi / 2).alpha)
    assert np.abs(alpha - np.array([0, 1, 0, 0])).max() < 1e-12


def test_frft_apply_matches_oracle():
    psi = np.zeros(8, dtype=complex)
    psi[0] = 1.0
    out = np.asarray(qfunc.frft_apply(3, 0.6, psi))
    ref = qfunc.spectral_function_oracle(dft(3), qfunc.FunctionSpec.frft(0.6)) @ psi
    assert np.abs(out - ref).max() < 1e-8


def test_synthesize_and_verify_passes():
    bundle = qfunc.synthesize(dft(3), qfunc.FunctionSpec.frft(0.4), 4)
    assert bundle.m == 4
    assert bundle.ancillas == 2
    report = qfunc.verify(bundle, dft(3), qfunc.FunctionSpec.frft(0.4), seed=7)
    assert report["pass"]
    names = {c["name"] for c in report["checks"]}
    assert "end_to_end" in names


def test_cost_estimate_worked_value():
    report = qfunc.cost_estimate(10, 4)
    assert report["bound_A"] == 420
    assert report["total_bound"] == 2 * 420 + report["bound_small"]


def test_limitation_demo_norm():
    u = np.diag([1.0, 1.0j])
    g, norm_sq = qfunc.limitation_demo(u)
    assert norm_sq == pytest.approx(3.0, abs=1e-10)


def test_two_level_reassembly():
    b = qfunc.superposition_prep(4, 2)
    factors = qfunc.two_level_decompose(b)
    assert len(factors) <= 6
    product = np.eye(4, dtype=complex)
    for i, j, block in factors:
        full = np.eye(4, dtype=complex)
        full[np.ix_([i, j], [i, j])] = block
        product = product @ full
    assert np.abs(product - b).max() < 1e-10


def test_unitarity_lemma_check():
    coeffs = qfunc.frft_coefficients(1.3)
    row_dev, offdiag, inners = qfunc.unitarity_lemma_check(coeffs)
    assert row_dev < 1e-10
    assert offdiag < 1e-10
    assert len(inners) == 4
