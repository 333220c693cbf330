#include "qfunc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace qfunc {

namespace {

constexpr double kGateUnitarityTol = 1e-10;
constexpr int kDenseWidthLimit = 12;

void check_indices(const std::vector<int>& indices, int width, const char* who) {
    std::set<int> seen;
    for (int q : indices) {
        if (q < 0 || q >= width) {
            std::ostringstream os;
            os << who << ": qubit index " << q << " outside width " << width;
            throw DimensionError(os.str());
        }
        if (!seen.insert(q).second) {
            std::ostringstream os;
            os << who << ": duplicate qubit index " << q;
            throw DimensionError(os.str());
        }
    }
}

void check_gate(const Gate& g, int width) {
    std::visit(
        [&](const auto& gate) {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, SingleGate>) {
                check_indices({gate.qubit}, width, "single gate");
                if (unitarity_residual(gate.u) > kGateUnitarityTol) {
                    throw PreconditionError("single gate: matrix is not unitary");
                }
            } else if constexpr (std::is_same_v<T, CnotGate>) {
                check_indices({gate.control, gate.target}, width, "cnot");
            } else if constexpr (std::is_same_v<T, CphaseGate>) {
                check_indices({gate.control, gate.target}, width, "cphase");
            } else if constexpr (std::is_same_v<T, SwapGate>) {
                check_indices({gate.a, gate.b}, width, "swap");
            } else if constexpr (std::is_same_v<T, CompositeGate>) {
                check_indices(gate.qubits, width, "composite");
                const auto dim = Eigen::Index{1} << gate.qubits.size();
                if (gate.u.rows() != dim || gate.u.cols() != dim) {
                    throw DimensionError("composite: matrix dimension must be 2^qubits");
                }
                if (unitarity_residual(gate.u) > kGateUnitarityTol) {
                    throw PreconditionError("composite: matrix is not unitary");
                }
            } else if constexpr (std::is_same_v<T, ControlledCompositeGate>) {
                std::vector<int> all = gate.controls;
                all.insert(all.end(), gate.qubits.begin(), gate.qubits.end());
                check_indices(all, width, "controlled composite");
                if (gate.control_values.size() != gate.controls.size()) {
                    throw DimensionError("controlled composite: one required value per control");
                }
                for (int v : gate.control_values) {
                    if (v != 0 && v != 1) {
                        throw PreconditionError("controlled composite: control values are bits");
                    }
                }
                const auto dim = Eigen::Index{1} << gate.qubits.size();
                if (gate.u.rows() != dim || gate.u.cols() != dim) {
                    throw DimensionError("controlled composite: matrix dimension must be 2^qubits");
                }
                if (unitarity_residual(gate.u) > kGateUnitarityTol) {
                    throw PreconditionError("controlled composite: matrix is not unitary");
                }
            }
        },
        g);
}

inline Eigen::Index bit_mask(int width, int qubit) {
    return Eigen::Index{1} << (width - 1 - qubit);
}

void apply_single(CVector& state, int width, const SingleGate& g) {
    const Eigen::Index mask = bit_mask(width, g.qubit);
    for (Eigen::Index b = 0; b < state.size(); ++b) {
        if (b & mask) continue;
        const Complex a0 = state[b];
        const Complex a1 = state[b | mask];
        state[b] = g.u(0, 0) * a0 + g.u(0, 1) * a1;
        state[b | mask] = g.u(1, 0) * a0 + g.u(1, 1) * a1;
    }
}

void apply_cnot(CVector& state, int width, const CnotGate& g) {
    const Eigen::Index mc = bit_mask(width, g.control);
    const Eigen::Index mt = bit_mask(width, g.target);
    for (Eigen::Index b = 0; b < state.size(); ++b) {
        if ((b & mc) && !(b & mt)) {
            std::swap(state[b], state[b | mt]);
        }
    }
}

void apply_cphase(CVector& state, int width, const CphaseGate& g) {
    const Eigen::Index mc = bit_mask(width, g.control);
    const Eigen::Index mt = bit_mask(width, g.target);
    const Complex phase = std::polar(1.0, g.theta);
    for (Eigen::Index b = 0; b < state.size(); ++b) {
        if ((b & mc) && (b & mt)) state[b] *= phase;
    }
}

void apply_swap(CVector& state, int width, const SwapGate& g) {
    const Eigen::Index ma = bit_mask(width, g.a);
    const Eigen::Index mb = bit_mask(width, g.b);
    for (Eigen::Index b = 0; b < state.size(); ++b) {
        if ((b & ma) && !(b & mb)) {
            std::swap(state[b], state[(b & ~ma) | mb]);
        }
    }
}

void apply_matrix_on(CVector& state, int width, const std::vector<int>& qubits, const CMatrix& u,
                     const std::vector<int>& controls, const std::vector<int>& control_values) {
    const auto sub = static_cast<int>(qubits.size());
    const Eigen::Index sub_dim = Eigen::Index{1} << sub;

    std::vector<Eigen::Index> offsets(static_cast<std::size_t>(sub_dim), 0);
    Eigen::Index targets_mask = 0;
    for (int t = 0; t < sub; ++t) {
        const Eigen::Index mask = bit_mask(width, qubits[static_cast<std::size_t>(t)]);
        targets_mask |= mask;
        const Eigen::Index sub_bit = Eigen::Index{1} << (sub - 1 - t);
        for (Eigen::Index s = 0; s < sub_dim; ++s) {
            if (s & sub_bit) offsets[static_cast<std::size_t>(s)] |= mask;
        }
    }

    Eigen::Index control_mask = 0;
    Eigen::Index control_want = 0;
    for (std::size_t i = 0; i < controls.size(); ++i) {
        const Eigen::Index mask = bit_mask(width, controls[i]);
        control_mask |= mask;
        if (control_values[i]) control_want |= mask;
    }

    CVector scratch(sub_dim);
    for (Eigen::Index base = 0; base < state.size(); ++base) {
        if (base & targets_mask) continue;
        if ((base & control_mask) != control_want) continue;
        for (Eigen::Index s = 0; s < sub_dim; ++s) {
            scratch[s] = state[base | offsets[static_cast<std::size_t>(s)]];
        }
        scratch = u * scratch;
        for (Eigen::Index s = 0; s < sub_dim; ++s) {
            state[base | offsets[static_cast<std::size_t>(s)]] = scratch[s];
        }
    }
}

void apply_gate(CVector& state, int width, const Gate& g) {
    std::visit(
        [&](const auto& gate) {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, SingleGate>) {
                apply_single(state, width, gate);
            } else if constexpr (std::is_same_v<T, CnotGate>) {
                apply_cnot(state, width, gate);
            } else if constexpr (std::is_same_v<T, CphaseGate>) {
                apply_cphase(state, width, gate);
            } else if constexpr (std::is_same_v<T, SwapGate>) {
                apply_swap(state, width, gate);
            } else if constexpr (std::is_same_v<T, CompositeGate>) {
                apply_matrix_on(state, width, gate.qubits, gate.u, {}, {});
            } else if constexpr (std::is_same_v<T, ControlledCompositeGate>) {
                apply_matrix_on(state, width, gate.qubits, gate.u, gate.controls,
                                gate.control_values);
            }
        },
        g);
}

}  // namespace

Gate inverse_gate(const Gate& g) {
    return std::visit(
        [](const auto& gate) -> Gate {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, SingleGate>) {
                return SingleGate{gate.qubit, gate.u.adjoint(), gate.name};
            } else if constexpr (std::is_same_v<T, CphaseGate>) {
                return CphaseGate{gate.control, gate.target, -gate.theta};
            } else if constexpr (std::is_same_v<T, CompositeGate>) {
                return CompositeGate{gate.qubits, gate.u.adjoint(), gate.label};
            } else if constexpr (std::is_same_v<T, ControlledCompositeGate>) {
                return ControlledCompositeGate{gate.controls, gate.control_values, gate.qubits,
                                               gate.u.adjoint(), gate.label};
            } else {
                return gate;  // cnot and swap are involutions
            }
        },
        g);
}

Circuit::Circuit(int width) : width_(width) {
    if (width < 1) {
        throw DimensionError("Circuit: width must be >= 1");
    }
}

void Circuit::append(Gate g) {
    check_gate(g, width_);
    gates_.push_back(std::move(g));
}

Circuit Circuit::inverse() const {
    Circuit inv(width_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        inv.append(inverse_gate(*it));
    }
    return inv;
}

CVector simulate(const Circuit& c, const CVector& psi, std::size_t gate_count) {
    const Eigen::Index dim = Eigen::Index{1} << c.width();
    if (psi.size() != dim) {
        throw DimensionError("simulate: state dimension must be 2^width");
    }
    if (std::abs(psi.norm() - 1.0) > kGateUnitarityTol) {
        throw PreconditionError("simulate: state must be normalized");
    }
    CVector state = psi;
    const std::size_t count = std::min(gate_count, c.gates().size());
    for (std::size_t i = 0; i < count; ++i) {
        apply_gate(state, c.width(), c.gates()[i]);
    }
    return state;
}

CMatrix circuit_to_matrix(const Circuit& c) {
    if (c.width() > kDenseWidthLimit) {
        throw ResourceError("circuit_to_matrix: width exceeds the dense materialization limit");
    }
    const Eigen::Index dim = Eigen::Index{1} << c.width();
    CMatrix m(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        CVector basis = CVector::Zero(dim);
        basis[j] = 1.0;
        m.col(j) = simulate(c, basis);
    }
    return m;
}

Circuit qft_circuit(int n) {
    if (n < 1 || n > kDenseWidthLimit) {
        throw ResourceError("qft_circuit: supported sizes are 1..12");
    }
    Eigen::Matrix2cd h;
    h << 1.0, 1.0, 1.0, -1.0;
    h /= std::sqrt(2.0);

    Circuit c(n);
    for (int q = 0; q < n; ++q) {
        c.append(SingleGate{q, h, "h"});
        for (int p = q + 1; p < n; ++p) {
            // Negative angles produce the exp(-2 pi i kl / 2^n) kernel.
            c.append(CphaseGate{p, q, -std::numbers::pi / static_cast<double>(1 << (p - q))});
        }
    }
    for (int q = 0; q < n / 2; ++q) {
        c.append(SwapGate{q, n - 1 - q});
    }
    return c;
}

Circuit controlled_power_block(const CMatrix& u, int mu) {
    if (mu < 0) {
        throw PreconditionError("controlled_power_block: mu must be >= 0");
    }
    if (!is_unitary(u, kGateUnitarityTol)) {
        throw PreconditionError("controlled_power_block: U must be unitary");
    }
    const auto dim = u.rows();
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    if (n == 0 || (Eigen::Index{1} << n) != dim) {
        throw DimensionError("controlled_power_block: U dimension must be 2^n with n >= 1");
    }

    std::vector<int> system(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) system[static_cast<std::size_t>(i)] = mu + i;

    Circuit c(mu + n);
    CMatrix power = u;  // U^(2^eta), advanced by squaring
    for (int eta = 0; eta < mu; ++eta) {
        std::ostringstream label;
        label << "U^" << (1 << eta);
        c.append(ControlledCompositeGate{{mu - 1 - eta}, {1}, system, power, label.str()});
        if (eta + 1 < mu) power = power * power;
    }
    return c;
}

Circuit assemble_generic(const SynthesisBundle& bundle, const CMatrix& u, double tol) {
    const int m = bundle.m;
    const int mu = bundle.ancillas;
    if (m < 1 || mu != ancilla_count(m)) {
        throw ConsistencyError("assemble_generic: bundle ancilla count does not match m");
    }
    const Eigen::Index reg = Eigen::Index{1} << mu;
    if (bundle.prep_matrix.rows() != reg || bundle.ancilla_matrix.rows() != reg) {
        throw ConsistencyError("assemble_generic: register matrices do not match 2^ancillas");
    }
    if (max_abs(CMatrix(bundle.ancilla_matrix.topLeftCorner(m, m) - bundle.coeff_matrix)) != 0.0) {
        throw ConsistencyError("assemble_generic: ancilla matrix must embed the coefficient matrix");
    }
    if (unitarity_residual(bundle.prep_matrix) > 1e-9 ||
        unitarity_residual(bundle.ancilla_matrix) > 1e-9) {
        throw ConsistencyError("assemble_generic: register matrices must be unitary");
    }
    const CVector first = bundle.prep_matrix.col(0);
    for (Eigen::Index i = 0; i < reg; ++i) {
        const Complex want = i < m ? Complex{1.0 / std::sqrt(static_cast<double>(m))} : Complex{0.0};
        if (std::abs(first[i] - want) > 1e-12) {
            throw ConsistencyError("assemble_generic: prep matrix first column is not the flat superposition");
        }
    }
    const auto tau = scalar_power_check(u, m, tol);
    if (!tau || std::abs(*tau - bundle.tau) > kNodeTol) {
        throw ConsistencyError("assemble_generic: U^m does not match the bundle scalar");
    }

    const auto dim = u.rows();
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    if (n == 0 || (Eigen::Index{1} << n) != dim) {
        throw DimensionError("assemble_generic: U dimension must be 2^n with n >= 1");
    }

    std::vector<int> ancilla(static_cast<std::size_t>(mu));
    for (int i = 0; i < mu; ++i) ancilla[static_cast<std::size_t>(i)] = i;
    std::vector<int> system(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) system[static_cast<std::size_t>(i)] = mu + i;

    Circuit c(mu + n);
    c.append(CompositeGate{ancilla, bundle.prep_matrix, "B"});

    const Circuit block = controlled_power_block(u, mu);
    for (const Gate& g : block.gates()) c.append(g);

    c.append(CompositeGate{ancilla, bundle.ancilla_matrix, "M"});

    // Inverse powers in reverse order, U^(-2^(mu-1)) down to U^(-1).
    for (auto it = block.gates().rbegin(); it != block.gates().rend(); ++it) {
        c.append(inverse_gate(*it));
    }

    c.append(CompositeGate{ancilla, bundle.prep_matrix.adjoint(), "Bdag"});
    return c;
}

}  // namespace qfunc
