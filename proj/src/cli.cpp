#include "qfunc/cli.hpp"

#include "qfunc/circuit.hpp"
#include "qfunc/cost.hpp"
#include "qfunc/frft.hpp"
#include "qfunc/io.hpp"
#include "qfunc/spectral.hpp"
#include "qfunc/synthesis.hpp"
#include "qfunc/verification.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace qfunc::cli {

namespace {

namespace fs = std::filesystem;

struct BuildOptions {
    std::string matrix_path;
    std::string circuit_path;
    std::string spec_path;
    std::optional<double> frft_x;
    std::optional<double> power_s;
    std::string named_fn;
    int m = 0;  // 0 = auto-detect
    double tol = kDefaultTol;
    std::uint64_t seed = 12345;
    std::string out_dir = ".";
};

// Input unitary plus the gate count of its circuit when one was given.
std::pair<CMatrix, std::int64_t> load_unitary(const std::string& matrix_path,
                                              const std::string& circuit_path, double tol) {
    if (!matrix_path.empty()) {
        CMatrix u = matrix_from_json(read_json_file(matrix_path));
        if (!is_unitary(u, tol)) {
            throw PreconditionError("input matrix is not unitary at tolerance " +
                                    std::to_string(tol));
        }
        return {std::move(u), 1};
    }
    const Circuit c = circuit_from_json(read_json_file(circuit_path));
    return {circuit_to_matrix(c), static_cast<std::int64_t>(c.gates().size())};
}

FunctionSpec load_function(const BuildOptions& opt) {
    int sources = 0;
    if (!opt.spec_path.empty()) ++sources;
    if (opt.frft_x) ++sources;
    if (opt.power_s) ++sources;
    if (!opt.named_fn.empty()) ++sources;
    if (sources != 1) {
        throw CLI::ValidationError("build", "give exactly one of --spec, --frft, --power, --fn");
    }
    if (!opt.spec_path.empty()) return function_spec_from_json(read_json_file(opt.spec_path));
    if (opt.frft_x) return FunctionSpec::frft(*opt.frft_x);
    if (opt.power_s) return FunctionSpec::power(*opt.power_s);
    if (opt.named_fn == "identity") return FunctionSpec::identity();
    if (opt.named_fn == "conjugate") return FunctionSpec::conjugate();
    throw CLI::ValidationError("build", "--fn accepts identity or conjugate");
}

int run_mpoly(const std::string& path, double tol, std::ostream& out) {
    CMatrix u = matrix_from_json(read_json_file(path));
    if (!is_unitary(u, tol)) {
        throw PreconditionError("input matrix is not unitary");
    }
    const Polynomial mpoly = minimal_polynomial(u, tol);
    out << mpoly.str();
    if (auto m = detect_scalar_power(u, 64, tol)) {
        const Complex tau = *scalar_power_check(u, *m, tol);
        out << "; m=" << *m << ", tau=" << format_complex(tau) << "\n";
        return kExitPass;
    }
    out << "; no m <= 64 with U^m scalar\n";
    return kExitMathError;
}

int run_build(const BuildOptions& opt, std::ostream& out) {
    auto [u, gate_count] = load_unitary(opt.matrix_path, opt.circuit_path, opt.tol);
    const FunctionSpec f = load_function(opt);

    int m = opt.m;
    if (m == 0) {
        const auto detected = detect_scalar_power(u, 64, opt.tol);
        if (!detected) {
            throw PreconditionError("no m <= 64 with U^m scalar; pass --m to override");
        }
        m = *detected;
    }
    if (auto fm = f.sample_count(); fm && *fm != m) {
        // A sampled function fixes its own node count; honor it when the
        // caller did not force a different one.
        if (opt.m == 0 && scalar_power_check(u, *fm, opt.tol)) {
            m = *fm;
        }
    }

    const SynthesisBundle bundle = synthesize(u, f, m, opt.tol);
    const Circuit circuit = assemble_generic(bundle, u, opt.tol);
    const VerificationReport report = verify_bundle(bundle, u, f, opt.seed, opt.tol, gate_count);

    const fs::path dir(opt.out_dir);
    fs::create_directories(dir);
    write_json_file(dir / "prep_matrix.json", matrix_to_json(bundle.prep_matrix));
    write_json_file(dir / "coeff_matrix.json", matrix_to_json(bundle.coeff_matrix));
    write_json_file(dir / "ancilla_matrix.json", matrix_to_json(bundle.ancilla_matrix));
    write_json_file(dir / "circuit.json", circuit_to_json(circuit));
    write_json_file(dir / "report.json", report.to_json());

    out << "m=" << bundle.m << " mu=" << bundle.ancillas
        << " tau=" << format_complex(bundle.tau) << " function=" << f.describe() << "\n";
    out << report.summary();
    return report.pass ? kExitPass : kExitVerificationFailure;
}

int run_simulate(const std::string& circuit_path, const std::string& state_path,
                 const std::string& out_path, std::ostream& out) {
    const Circuit c = circuit_from_json(read_json_file(circuit_path));
    CVector psi;
    if (state_path.empty()) {
        psi = CVector::Zero(Eigen::Index{1} << c.width());
        psi[0] = 1.0;
    } else {
        psi = state_from_json(read_json_file(state_path));
    }
    const CVector result = simulate(c, psi);
    if (!out_path.empty()) {
        write_json_file(out_path, state_to_json(result));
        out << "wrote " << out_path << "\n";
    } else {
        out << state_to_json(result).dump(2) << "\n";
    }
    return kExitPass;
}

int run_frft(int n, double x, const std::string& state_path, const std::string& out_path,
             std::ostream& out) {
    CVector psi;
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (state_path.empty()) {
        psi = CVector::Zero(dim);
        psi[0] = 1.0;
    } else {
        psi = state_from_json(read_json_file(state_path));
    }
    const CVector result = frft_apply(FrftParams{n, x}, psi);
    if (!out_path.empty()) {
        write_json_file(out_path, state_to_json(result));
        out << "wrote " << out_path << "\n";
    } else {
        out << state_to_json(result).dump(2) << "\n";
    }
    return kExitPass;
}

int run_limitation(const std::string& path, double tol, std::ostream& out) {
    CMatrix u = matrix_from_json(read_json_file(path));
    const LimitationReport report = limitation_demo(u, tol);
    out << "minimal polynomial: " << report.mpoly.str() << "\n";
    out << "g(x) = " << report.g.str() << "\n";
    out << "first row squared norm: " << report.first_row_norm_sq << " (> 1)\n";
    return kExitPass;
}

int run_cost(std::int64_t k, int m, bool sweep, const std::string& out_path, std::ostream& out) {
    std::ostringstream table;
    table << "m,mu,bound_A,bound_small,total_bound\n";
    auto emit = [&](int mm) {
        const CostReport r = cost_estimate(k, mm);
        table << r.m << "," << r.mu << "," << r.bound_a << "," << r.bound_small << ","
              << r.total_bound << "\n";
    };
    if (sweep) {
        for (int mm = 2; mm <= 64; ++mm) emit(mm);
    } else {
        emit(m);
    }
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            throw FormError("cannot open file for writing: " + out_path);
        }
        file << table.str();
        out << "wrote " << out_path << "\n";
    } else {
        out << table.str();
    }
    return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Synthesis of quantum circuits for functions of a unitary"};
    app.require_subcommand(1);

    // mpoly
    std::string mpoly_path;
    double mpoly_tol = kDefaultTol;
    auto* mpoly = app.add_subcommand(
        "mpoly", "Minimal polynomial of a unitary and its smallest scalar power");
    mpoly->add_option("matrix", mpoly_path, "Matrix JSON file")->required();
    mpoly->add_option("--tol", mpoly_tol, "Numerical tolerance");

    // build
    BuildOptions build_opt;
    auto* build = app.add_subcommand(
        "build", "Synthesize and verify the generic circuit for f(U)");
    build->add_option("--matrix", build_opt.matrix_path, "Unitary as a matrix JSON file");
    build->add_option("--circuit", build_opt.circuit_path, "Unitary as a circuit JSON file");
    build->add_option("--spec", build_opt.spec_path, "Function spec JSON file");
    build->add_option("--frft", build_opt.frft_x, "Fractional Fourier angle x");
    build->add_option("--power", build_opt.power_s, "Principal-branch power exponent");
    build->add_option("--fn", build_opt.named_fn, "Named function: identity or conjugate");
    build->add_option("--m", build_opt.m, "Power count override (default: auto-detect)");
    build->add_option("--tol", build_opt.tol, "Numerical tolerance");
    build->add_option("--seed", build_opt.seed, "Seed for sampled verification states");
    build->add_option("--out", build_opt.out_dir, "Output directory");

    // simulate
    std::string sim_circuit, sim_state, sim_out;
    auto* sim = app.add_subcommand("simulate", "Run a circuit file on a state");
    sim->add_option("--circuit", sim_circuit, "Circuit JSON file")->required();
    sim->add_option("--state", sim_state, "Input state JSON file (default |0...0>)");
    sim->add_option("--out", sim_out, "Output state file (default stdout)");

    // frft
    int frft_n = 3;
    double frft_x = 0.0;
    std::string frft_state, frft_out;
    auto* frft = app.add_subcommand(
        "frft",
        "Fractional Fourier transform of a state; x is the angle in radians "
        "(x = pi/2 is the plain transform, so the conventional order a = 2x/pi)");
    frft->add_option("--n", frft_n, "System qubit count")->required();
    frft->add_option("--x", frft_x, "Transform angle in radians")->required();
    frft->add_option("--state", frft_state, "Input state JSON file (default |0...0>)");
    frft->add_option("--out", frft_out, "Output state file (default stdout)");

    // limitation
    std::string lim_path;
    double lim_tol = kDefaultTol;
    auto* lim = app.add_subcommand(
        "limitation", "Show the non-unitary first row for a non-binomial minimal polynomial");
    lim->add_option("matrix", lim_path, "Matrix JSON file")->required();
    lim->add_option("--tol", lim_tol, "Numerical tolerance");

    // cost
    std::int64_t cost_k = 1;
    int cost_m = 1;
    bool cost_sweep = false;
    std::string cost_out;
    auto* cost = app.add_subcommand("cost", "Elementary-gate bounds as a CSV table");
    cost->add_option("--k", cost_k, "Gate count of the input circuit for U")->required();
    cost->add_option("--m", cost_m, "Power count m");
    cost->add_flag("--sweep", cost_sweep, "Emit rows for every m in 2..64");
    cost->add_option("--out", cost_out, "CSV output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitPass;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (mpoly->parsed()) return run_mpoly(mpoly_path, mpoly_tol, out);
        if (build->parsed()) return run_build(build_opt, out);
        if (sim->parsed()) return run_simulate(sim_circuit, sim_state, sim_out, out);
        if (frft->parsed()) return run_frft(frft_n, frft_x, frft_state, frft_out, out);
        if (lim->parsed()) return run_limitation(lim_path, lim_tol, out);
        if (cost->parsed()) return run_cost(cost_k, cost_m, cost_sweep, cost_out, out);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FormError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitMathError;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace qfunc::cli
