#pragma once

#include <cstdint>

namespace qfunc {

/// Elementary gates budgeted per two-level factor when lowering a register
/// matrix via multi-controlled constructions.
inline constexpr std::int64_t kSynthesisGatesPerFactor = 64;

/// Closed-form elementary-gate bounds for the generic circuit: a controlled
/// copy of U costs 14K gates, the power block needs 2^mu - 1 copies, and
/// each register matrix on mu qubits is budgeted through its two-level
/// factorization.
struct CostReport {
    std::int64_t k = 0;
    int m = 0;
    int mu = 0;
    std::int64_t bound_a = 0;      // 14 (2^mu - 1) K, one power block
    std::int64_t bound_small = 0;  // 3 c_syn mu 4^mu, the three register matrices
    std::int64_t total_bound = 0;  // two power blocks plus the register matrices
};

CostReport cost_estimate(std::int64_t k, int m);

}  // namespace qfunc
