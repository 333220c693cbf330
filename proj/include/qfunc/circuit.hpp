#pragma once

#include "qfunc/synthesis.hpp"
#include "qfunc/types.hpp"

#include <string>
#include <variant>
#include <vector>

namespace qfunc {

/// Basis convention used throughout: qubit 0 is the most significant bit,
/// so a basis index decomposes as b = sum_q bit_q * 2^(width-1-q). Ancilla
/// qubits occupy indices 0..mu-1 and the system register follows, which
/// makes controlled-power blocks literally block diagonal.

struct SingleGate {
    int qubit;
    Eigen::Matrix2cd u;
    std::string name;  // "h" or "x" for the named file-format kinds, else empty
};

struct CnotGate {
    int control;
    int target;
};

struct CphaseGate {
    int control;
    int target;
    double theta;  // radians
};

struct SwapGate {
    int a;
    int b;
};

struct CompositeGate {
    std::vector<int> qubits;  // ordered, first entry is the sub-register MSB
    CMatrix u;                // dimension 2^qubits.size()
    std::string label;
};

struct ControlledCompositeGate {
    std::vector<int> controls;
    std::vector<int> control_values;  // required bit per control, 0 or 1
    std::vector<int> qubits;
    CMatrix u;
    std::string label;
};

using Gate = std::variant<SingleGate, CnotGate, CphaseGate, SwapGate, CompositeGate,
                          ControlledCompositeGate>;

Gate inverse_gate(const Gate& g);

class Circuit {
public:
    explicit Circuit(int width);

    int width() const { return width_; }
    const std::vector<Gate>& gates() const { return gates_; }

    /// Validates qubit indices and embedded-matrix unitarity before adding.
    void append(Gate g);

    Circuit inverse() const;

private:
    int width_;
    std::vector<Gate> gates_;
};

/// Applies the first gate_count gates (all of them by default) to psi.
CVector simulate(const Circuit& c, const CVector& psi, std::size_t gate_count = SIZE_MAX);

/// Dense matrix of the circuit, column j the image of basis state j.
CMatrix circuit_to_matrix(const Circuit& c);

/// Circuit for the discrete Fourier transform with kernel exp(-2 pi i kl / 2^n),
/// including the trailing bit-reversal swaps. Gate count is
/// n + n(n-1)/2 + floor(n/2).
Circuit qft_circuit(int n);

/// Fragment applying U^a to the system register when the ancilla register
/// holds a: one controlled power U^(2^eta) per ancilla bit.
Circuit controlled_power_block(const CMatrix& u, int mu);

/// The five-stage circuit realizing the combination sum_i alpha_i U^i on
/// the system register, returning the ancillas to zero.
Circuit assemble_generic(const SynthesisBundle& bundle, const CMatrix& u,
                         double tol = kDefaultTol);

}  // namespace qfunc
