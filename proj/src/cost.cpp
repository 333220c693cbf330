#include "qfunc/cost.hpp"

#include "qfunc/synthesis.hpp"
#include "qfunc/types.hpp"

namespace qfunc {

CostReport cost_estimate(std::int64_t k, int m) {
    if (k < 1 || m < 1) {
        throw PreconditionError("cost_estimate: need K >= 1 and m >= 1");
    }
    CostReport r;
    r.k = k;
    r.m = m;
    r.mu = ancilla_count(m);
    const std::int64_t reg = std::int64_t{1} << r.mu;
    r.bound_a = 14 * (reg - 1) * k;
    r.bound_small = 3 * kSynthesisGatesPerFactor * r.mu * reg * reg;
    r.total_bound = 2 * r.bound_a + r.bound_small;
    return r;
}

}  // namespace qfunc
