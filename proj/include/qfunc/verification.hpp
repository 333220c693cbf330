#pragma once

#include "qfunc/circuit.hpp"
#include "qfunc/cost.hpp"
#include "qfunc/function_spec.hpp"
#include "qfunc/synthesis.hpp"
#include "qfunc/types.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qfunc {

struct CheckResult {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

/// Residual checks for one synthesis: register-matrix unitarity, the block
/// embedding, the three intermediate superposition states, and the
/// end-to-end comparison against the spectral reference on sampled states.
struct VerificationReport {
    std::vector<CheckResult> checks;
    std::int64_t gate_count = 0;  // composite-level gates in the assembled circuit
    CostReport cost;              // elementary-gate bounds for the same job
    std::uint64_t seed = 0;
    bool pass = false;

    nlohmann::json to_json() const;
    std::string summary() const;
};

/// Verifies bundle against U and f: simulates the assembled circuit on
/// 20 seeded states (plus every basis state when the system is small) and
/// checks each stage against directly constructed references.
/// input_gate_count is the elementary-gate count K of the circuit for U,
/// used only by the cost bounds (1 when U was given as a bare matrix).
VerificationReport verify_bundle(const SynthesisBundle& bundle, const CMatrix& u,
                                 const FunctionSpec& f, std::uint64_t seed,
                                 double tol = kDefaultTol, std::int64_t input_gate_count = 1);

}  // namespace qfunc
