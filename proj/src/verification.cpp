#include "qfunc/verification.hpp"

#include "qfunc/random.hpp"
#include "qfunc/spectral.hpp"

#include <cmath>
#include <sstream>

namespace qfunc {

namespace {

constexpr double kEndToEndTol = 1e-8;
constexpr double kStateTol = 1e-10;
constexpr double kRegisterUnitTol = 1e-9;
constexpr double kPrepUnitTol = 1e-12;

double state_distance(const CVector& a, const CVector& b) { return max_abs(CVector(a - b)); }

}  // namespace

VerificationReport verify_bundle(const SynthesisBundle& bundle, const CMatrix& u,
                                 const FunctionSpec& f, std::uint64_t seed, double tol,
                                 std::int64_t input_gate_count) {
    VerificationReport report;
    report.seed = seed;

    const Circuit circuit = assemble_generic(bundle, u, tol);
    report.gate_count = static_cast<std::int64_t>(circuit.gates().size());

    const int m = bundle.m;
    const int mu = bundle.ancillas;
    const auto dim = u.rows();
    const Eigen::Index reg = Eigen::Index{1} << mu;
    const Eigen::Index full = reg * dim;

    auto add = [&](const std::string& name, double residual, double tolerance) {
        report.checks.push_back(CheckResult{name, residual, tolerance, residual <= tolerance});
    };

    add("prep_unitary", unitarity_residual(bundle.prep_matrix), kPrepUnitTol);
    add("coeff_unitary", unitarity_residual(bundle.coeff_matrix), kRegisterUnitTol);
    add("ancilla_unitary", unitarity_residual(bundle.ancilla_matrix), kRegisterUnitTol);

    CMatrix embedded = CMatrix::Identity(reg, reg);
    embedded.topLeftCorner(m, m) = bundle.coeff_matrix;
    add("block_structure", max_abs(CMatrix(bundle.ancilla_matrix - embedded)), 0.0);

    CVector target = CVector::Zero(reg);
    for (int i = 0; i < m; ++i) target[i] = 1.0 / std::sqrt(static_cast<double>(m));
    add("prep_column", max_abs(CVector(bundle.prep_matrix.col(0) - target)), kPrepUnitTol);

    if (circuit.width() <= 12) {
        add("circuit_unitary", unitarity_residual(circuit_to_matrix(circuit)), kRegisterUnitTol);
    }

    // Reference operator and power table for the intermediate states.
    const CMatrix v = spectral_function_oracle(u, f, tol);
    std::vector<CMatrix> powers(static_cast<std::size_t>(reg));
    powers[0] = CMatrix::Identity(dim, dim);
    for (Eigen::Index i = 1; i < reg; ++i) {
        powers[static_cast<std::size_t>(i)] = powers[static_cast<std::size_t>(i - 1)] * u;
    }

    RandomSource rng(seed);
    std::vector<CVector> samples;
    if (dim <= 16) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            CVector basis = CVector::Zero(dim);
            basis[j] = 1.0;
            samples.push_back(std::move(basis));
        }
    }
    for (int i = 0; i < 20; ++i) {
        samples.push_back(rng.unit_state(static_cast<int>(dim)));
    }

    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
    const std::size_t prep_end = 1;
    const std::size_t powers_end = prep_end + static_cast<std::size_t>(mu);
    const std::size_t mix_end = powers_end + 1;

    double superposition_dev = 0.0;
    double power_dev = 0.0;
    double mixed_dev = 0.0;
    double end_dev = 0.0;
    double leak = 0.0;

    for (const CVector& psi : samples) {
        CVector input = CVector::Zero(full);
        input.head(dim) = psi;

        CVector ref = CVector::Zero(full);
        for (int i = 0; i < m; ++i) {
            ref.segment(i * dim, dim) = inv_sqrt_m * psi;
        }
        superposition_dev =
            std::max(superposition_dev, state_distance(simulate(circuit, input, prep_end), ref));

        for (int i = 0; i < m; ++i) {
            ref.segment(i * dim, dim) = inv_sqrt_m * (powers[static_cast<std::size_t>(i)] * psi);
        }
        power_dev = std::max(power_dev, state_distance(simulate(circuit, input, powers_end), ref));

        const CVector v_psi = v * psi;
        ref.setZero();
        for (int k = 0; k < m; ++k) {
            ref.segment(k * dim, dim) = inv_sqrt_m * (powers[static_cast<std::size_t>(k)] * v_psi);
        }
        mixed_dev = std::max(mixed_dev, state_distance(simulate(circuit, input, mix_end), ref));

        const CVector out = simulate(circuit, input);
        ref.setZero();
        ref.head(dim) = v_psi;
        end_dev = std::max(end_dev, state_distance(out, ref));
        leak = std::max(leak, out.tail(full - dim).norm());
    }

    add("state_superposition", superposition_dev, kStateTol);
    add("state_powers", power_dev, kStateTol);
    add("state_mixed", mixed_dev, kStateTol);
    add("end_to_end", end_dev, kEndToEndTol);
    add("ancilla_return", leak, kEndToEndTol);

    report.cost = cost_estimate(std::max<std::int64_t>(input_gate_count, 1), m);

    report.pass = true;
    for (const auto& check : report.checks) {
        report.pass = report.pass && check.pass;
    }
    return report;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json checks_j = nlohmann::json::array();
    for (const auto& c : checks) {
        checks_j.push_back({{"name", c.name},
                            {"residual", c.residual},
                            {"tolerance", c.tolerance},
                            {"pass", c.pass}});
    }
    return nlohmann::json{
        {"checks", std::move(checks_j)},
        {"gate_count", gate_count},
        {"cost",
         {{"K", cost.k},
          {"m", cost.m},
          {"mu", cost.mu},
          {"bound_A", cost.bound_a},
          {"bound_small", cost.bound_small},
          {"total_bound", cost.total_bound}}},
        {"seed", seed},
        {"pass", pass}};
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  residual " << c.residual
           << "  (tolerance " << c.tolerance << ")\n";
    }
    os << "gates (composite level): " << gate_count << "\n";
    os << "elementary bounds: bound_A=" << cost.bound_a << " bound_small=" << cost.bound_small
       << " total=" << cost.total_bound << "\n";
    os << "verdict: " << (pass ? "pass" : "fail") << "\n";
    return os.str();
}

}  // namespace qfunc
