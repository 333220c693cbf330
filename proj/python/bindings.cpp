#include "qfunc/circuit.hpp"
#include "qfunc/cost.hpp"
#include "qfunc/frft.hpp"
#include "qfunc/io.hpp"
#include "qfunc/spectral.hpp"
#include "qfunc/synthesis.hpp"
#include "qfunc/two_level.hpp"
#include "qfunc/verification.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qfunc;

namespace {

FunctionSpec spec_from_arg(const py::object& f) {
    if (py::isinstance<FunctionSpec>(f)) {
        return f.cast<FunctionSpec>();
    }
    if (py::isinstance<py::str>(f)) {
        const auto tag = f.cast<std::string>();
        if (tag == "identity") return FunctionSpec::identity();
        if (tag == "conjugate") return FunctionSpec::conjugate();
        throw DomainError("unknown named function '" + tag + "'");
    }
    throw DomainError("expected a FunctionSpec or a named function string");
}

py::dict report_to_dict(const VerificationReport& report) {
    py::list checks;
    for (const auto& c : report.checks) {
        py::dict d;
        d["name"] = c.name;
        d["residual"] = c.residual;
        d["tolerance"] = c.tolerance;
        d["pass"] = c.pass;
        checks.append(d);
    }
    py::dict out;
    out["checks"] = checks;
    out["gate_count"] = report.gate_count;
    out["pass"] = report.pass;
    out["seed"] = report.seed;
    py::dict cost;
    cost["K"] = report.cost.k;
    cost["m"] = report.cost.m;
    cost["mu"] = report.cost.mu;
    cost["bound_A"] = report.cost.bound_a;
    cost["bound_small"] = report.cost.bound_small;
    cost["total_bound"] = report.cost.total_bound;
    out["cost"] = cost;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Synthesis and simulation of quantum circuits for functions of a unitary";

    py::register_exception<DimensionError>(m, "DimensionError");
    py::register_exception<PreconditionError>(m, "PreconditionError");
    py::register_exception<DomainError>(m, "FunctionDomainError");
    py::register_exception<NotApplicableError>(m, "NotApplicableError");

    py::class_<FunctionSpec>(m, "FunctionSpec")
        .def_static("samples", &FunctionSpec::samples, py::arg("m"), py::arg("tau"),
                    py::arg("values"))
        .def_static("frft", &FunctionSpec::frft, py::arg("x"))
        .def_static("power", &FunctionSpec::power, py::arg("s"))
        .def_static("identity", &FunctionSpec::identity)
        .def_static("conjugate", &FunctionSpec::conjugate)
        .def("evaluate", &FunctionSpec::evaluate, py::arg("value"))
        .def("__repr__", &FunctionSpec::describe);

    py::class_<CoefficientVector>(m, "CoefficientVector")
        .def_readonly("alpha", &CoefficientVector::alpha)
        .def_readonly("m", &CoefficientVector::m)
        .def_readonly("tau", &CoefficientVector::tau);

    py::class_<SynthesisBundle>(m, "SynthesisBundle")
        .def_readonly("m", &SynthesisBundle::m)
        .def_readonly("ancillas", &SynthesisBundle::ancillas)
        .def_readonly("tau", &SynthesisBundle::tau)
        .def_readonly("coeffs", &SynthesisBundle::coeffs)
        .def_readonly("companion", &SynthesisBundle::companion)
        .def_readonly("coeff_matrix", &SynthesisBundle::coeff_matrix)
        .def_readonly("ancilla_matrix", &SynthesisBundle::ancilla_matrix)
        .def_readonly("prep_matrix", &SynthesisBundle::prep_matrix);

    py::class_<Circuit>(m, "Circuit")
        .def_property_readonly("width", &Circuit::width)
        .def_property_readonly("gate_count",
                               [](const Circuit& c) { return c.gates().size(); })
        .def("simulate",
             [](const Circuit& c, const CVector& psi) { return simulate(c, psi); },
             py::arg("state"))
        .def("to_matrix", &circuit_to_matrix)
        .def("inverse", &Circuit::inverse)
        .def("to_json", [](const Circuit& c) { return circuit_to_json(c).dump(); })
        .def_static("from_json", [](const std::string& text) {
            return circuit_from_json(nlohmann::json::parse(text));
        });

    // matrix-level operations
    m.def("is_unitary", &is_unitary, py::arg("matrix"), py::arg("tol") = kDefaultTol);
    m.def("unitary_power", &unitary_power, py::arg("matrix"), py::arg("k"));
    m.def(
        "eigendecompose_unitary",
        [](const CMatrix& u, double tol) {
            const Spectrum s = eigendecompose_unitary(u, tol);
            return py::make_tuple(s.eigenvalues, s.basis, s.clusters, s.cluster_values);
        },
        py::arg("matrix"), py::arg("tol") = kDefaultTol,
        "Returns (eigenvalues, basis, clusters, cluster_values)");
    m.def(
        "minimal_polynomial",
        [](const CMatrix& u, double tol) { return minimal_polynomial(u, tol).coeffs(); },
        py::arg("matrix"), py::arg("tol") = kDefaultTol,
        "Coefficients in ascending degree, monic");
    m.def(
        "scalar_power_check",
        [](const CMatrix& u, int m_, double tol) -> std::optional<Complex> {
            return scalar_power_check(u, m_, tol);
        },
        py::arg("matrix"), py::arg("m"), py::arg("tol") = kDefaultTol);
    m.def(
        "spectral_function_oracle",
        [](const CMatrix& u, const py::object& f, double tol) {
            return spectral_function_oracle(u, spec_from_arg(f), tol);
        },
        py::arg("matrix"), py::arg("function"), py::arg("tol") = kDefaultTol);

    // synthesis
    m.def("binomial_roots", &binomial_roots, py::arg("m"), py::arg("tau"));
    m.def(
        "interp_coefficients",
        [](const py::object& f, int m_, Complex tau) {
            return interp_coefficients(spec_from_arg(f), m_, tau);
        },
        py::arg("function"), py::arg("m"), py::arg("tau"));
    m.def(
        "companion_matrix",
        [](const std::vector<Complex>& coeffs) {
            return companion_matrix(Polynomial{std::vector<Complex>(coeffs)});
        },
        py::arg("coeffs"), "Companion matrix of a monic polynomial, ascending coefficients");
    m.def("coefficient_matrix", &coefficient_matrix, py::arg("coeffs"), py::arg("companion"));
    m.def("pad_to_register", &pad_to_register, py::arg("matrix"), py::arg("mu"));
    m.def("superposition_prep", &superposition_prep, py::arg("m"), py::arg("mu"));
    m.def(
        "unitarity_lemma_check",
        [](const CoefficientVector& alpha) {
            const LemmaReport r = unitarity_lemma_check(alpha);
            return py::make_tuple(r.max_row_norm_deviation, r.max_offdiag_inner, r.inners);
        },
        py::arg("coeffs"), "Returns (max_row_norm_deviation, max_offdiag_inner, inners)");
    m.def(
        "limitation_demo",
        [](const CMatrix& u, double tol) {
            const LimitationReport r = limitation_demo(u, tol);
            return py::make_tuple(r.g.coeffs(), r.first_row_norm_sq);
        },
        py::arg("matrix"), py::arg("tol") = kDefaultTol,
        "Returns (g coefficients, first row squared norm)");
    m.def(
        "extend_to_binomial",
        [](const CMatrix& u, int m_, double tol) {
            const ExtensionResult r = extend_to_binomial(u, m_, tol);
            return py::make_tuple(r.tau, r.nodes, r.m2.coeffs(), r.block_witness);
        },
        py::arg("matrix"), py::arg("m"), py::arg("tol") = kDefaultTol,
        "Returns (tau, nodes, m2 coefficients, block witness)");
    m.def("detect_scalar_power", &detect_scalar_power, py::arg("matrix"), py::arg("max_m") = 64,
          py::arg("tol") = kDefaultTol);
    m.def(
        "synthesize",
        [](const CMatrix& u, const py::object& f, int m_, double tol) {
            return synthesize(u, spec_from_arg(f), m_, tol);
        },
        py::arg("matrix"), py::arg("function"), py::arg("m"), py::arg("tol") = kDefaultTol);
    m.def("bundle_from_coefficients", &bundle_from_coefficients, py::arg("coeffs"));

    // circuits
    m.def("qft_circuit", &qft_circuit, py::arg("n"));
    m.def("controlled_power_block", &controlled_power_block, py::arg("matrix"), py::arg("mu"));
    m.def("assemble_generic", &assemble_generic, py::arg("bundle"), py::arg("matrix"),
          py::arg("tol") = kDefaultTol);
    m.def(
        "two_level_decompose",
        [](const CMatrix& w, double tol) {
            py::list out;
            for (const auto& f : two_level_decompose(w, tol)) {
                out.append(py::make_tuple(f.i, f.j, Eigen::MatrixXcd(f.block)));
            }
            return out;
        },
        py::arg("matrix"), py::arg("tol") = kDefaultTol,
        "List of (i, j, block) two-level factors whose product is the input");
    m.def(
        "cost_estimate",
        [](std::int64_t k, int m_) {
            const CostReport r = cost_estimate(k, m_);
            py::dict d;
            d["K"] = r.k;
            d["m"] = r.m;
            d["mu"] = r.mu;
            d["bound_A"] = r.bound_a;
            d["bound_small"] = r.bound_small;
            d["total_bound"] = r.total_bound;
            return d;
        },
        py::arg("k"), py::arg("m"));

    // fractional Fourier transform
    m.def("frft_coefficients", &frft_coefficients, py::arg("x"));
    m.def("frft_circuit", &frft_circuit, py::arg("n"), py::arg("x"));
    m.def(
        "frft_apply",
        [](int n, double x, const CVector& psi) { return frft_apply(FrftParams{n, x}, psi); },
        py::arg("n"), py::arg("x"), py::arg("state"));

    // verification
    m.def(
        "verify",
        [](const SynthesisBundle& bundle, const CMatrix& u, const py::object& f,
           std::uint64_t seed, double tol, std::int64_t input_gate_count) {
            return report_to_dict(
                verify_bundle(bundle, u, spec_from_arg(f), seed, tol, input_gate_count));
        },
        py::arg("bundle"), py::arg("matrix"), py::arg("function"), py::arg("seed") = 12345,
        py::arg("tol") = kDefaultTol, py::arg("input_gate_count") = 1);
}
