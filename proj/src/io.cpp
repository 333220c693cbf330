#include "qfunc/io.hpp"

#include <fstream>
#include <sstream>

namespace qfunc {

using nlohmann::json;

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw FormError(std::string(what) + ": expected a [re, im] pair");
    }
    return Complex{j[0].get<double>(), j[1].get<double>()};
}

const json& require(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw FormError(std::string(what) + ": missing field '" + key + "'");
    }
    return *it;
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("matrix_to_json: matrix must be square");
    }
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            entries.push_back(complex_to_json(m(i, k)));
        }
    }
    return json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

CMatrix matrix_from_json(const json& j) {
    const auto& dim_j = require(j, "dim", "matrix");
    if (!dim_j.is_number_integer() || dim_j.get<Eigen::Index>() < 1) {
        throw FormError("matrix: 'dim' must be a positive integer");
    }
    const auto dim = dim_j.get<Eigen::Index>();
    const auto& entries = require(j, "entries", "matrix");
    if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != dim * dim) {
        throw FormError("matrix: 'entries' must hold dim*dim pairs");
    }
    CMatrix m(dim, dim);
    Eigen::Index idx = 0;
    for (const auto& e : entries) {
        const Complex z = complex_from_json(e, "matrix entry");
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw FormError("matrix: entries must be finite");
        }
        m(idx / dim, idx % dim) = z;
        ++idx;
    }
    return m;
}

json state_to_json(const CVector& v) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        amps.push_back(complex_to_json(v[i]));
    }
    return json{{"dim", v.size()}, {"amplitudes", std::move(amps)}};
}

CVector state_from_json(const json& j) {
    const auto& dim_j = require(j, "dim", "state");
    if (!dim_j.is_number_integer() || dim_j.get<Eigen::Index>() < 1) {
        throw FormError("state: 'dim' must be a positive integer");
    }
    const auto dim = dim_j.get<Eigen::Index>();
    const auto& amps = require(j, "amplitudes", "state");
    if (!amps.is_array() || static_cast<Eigen::Index>(amps.size()) != dim) {
        throw FormError("state: 'amplitudes' must hold dim pairs");
    }
    CVector v(dim);
    Eigen::Index idx = 0;
    for (const auto& a : amps) {
        v[idx++] = complex_from_json(a, "state amplitude");
    }
    return v;
}

namespace {

json gate_to_json(const Gate& g) {
    return std::visit(
        [](const auto& gate) -> json {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, SingleGate>) {
                if (gate.name == "h" || gate.name == "x") {
                    return json{{"kind", gate.name}, {"qubit", gate.qubit}};
                }
                CMatrix u = gate.u;
                return json{{"kind", "composite"},
                            {"qubits", json::array({gate.qubit})},
                            {"matrix", matrix_to_json(u)}};
            } else if constexpr (std::is_same_v<T, CnotGate>) {
                return json{{"kind", "cnot"}, {"control", gate.control}, {"target", gate.target}};
            } else if constexpr (std::is_same_v<T, CphaseGate>) {
                return json{{"kind", "cphase"},
                            {"control", gate.control},
                            {"target", gate.target},
                            {"theta", gate.theta}};
            } else if constexpr (std::is_same_v<T, SwapGate>) {
                return json{{"kind", "swap"}, {"a", gate.a}, {"b", gate.b}};
            } else if constexpr (std::is_same_v<T, CompositeGate>) {
                json out{{"kind", "composite"},
                         {"qubits", gate.qubits},
                         {"matrix", matrix_to_json(gate.u)}};
                if (!gate.label.empty()) out["label"] = gate.label;
                return out;
            } else {
                json out{{"kind", "ccomposite"},
                         {"controls", gate.controls},
                         {"control_values", gate.control_values},
                         {"qubits", gate.qubits},
                         {"matrix", matrix_to_json(gate.u)}};
                if (!gate.label.empty()) out["label"] = gate.label;
                return out;
            }
        },
        g);
}

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) {
        throw FormError(std::string(what) + ": expected an array of qubit indices");
    }
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) {
            throw FormError(std::string(what) + ": indices must be integers");
        }
        out.push_back(e.get<int>());
    }
    return out;
}

Gate gate_from_json(const json& j) {
    const auto kind = require(j, "kind", "gate").get<std::string>();
    if (kind == "h" || kind == "x") {
        Eigen::Matrix2cd u;
        if (kind == "h") {
            u << 1.0, 1.0, 1.0, -1.0;
            u /= std::sqrt(2.0);
        } else {
            u << 0.0, 1.0, 1.0, 0.0;
        }
        return SingleGate{require(j, "qubit", "gate").get<int>(), u, kind};
    }
    if (kind == "cnot") {
        return CnotGate{require(j, "control", "gate").get<int>(),
                        require(j, "target", "gate").get<int>()};
    }
    if (kind == "cphase") {
        return CphaseGate{require(j, "control", "gate").get<int>(),
                          require(j, "target", "gate").get<int>(),
                          require(j, "theta", "gate").get<double>()};
    }
    if (kind == "swap") {
        return SwapGate{require(j, "a", "gate").get<int>(), require(j, "b", "gate").get<int>()};
    }
    if (kind == "composite") {
        CompositeGate g{int_list(require(j, "qubits", "gate"), "composite"),
                        matrix_from_json(require(j, "matrix", "gate")),
                        j.value("label", std::string{})};
        return g;
    }
    if (kind == "ccomposite") {
        ControlledCompositeGate g{int_list(require(j, "controls", "gate"), "ccomposite"),
                                  int_list(require(j, "control_values", "gate"), "ccomposite"),
                                  int_list(require(j, "qubits", "gate"), "ccomposite"),
                                  matrix_from_json(require(j, "matrix", "gate")),
                                  j.value("label", std::string{})};
        return g;
    }
    throw FormError("gate: unknown kind '" + kind + "'");
}

}  // namespace

json circuit_to_json(const Circuit& c) {
    json gates = json::array();
    for (const Gate& g : c.gates()) {
        gates.push_back(gate_to_json(g));
    }
    return json{{"width", c.width()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) {
    const auto& width_j = require(j, "width", "circuit");
    if (!width_j.is_number_integer() || width_j.get<int>() < 1) {
        throw FormError("circuit: 'width' must be a positive integer");
    }
    Circuit c(width_j.get<int>());
    const auto& gates = require(j, "gates", "circuit");
    if (!gates.is_array()) {
        throw FormError("circuit: 'gates' must be an array");
    }
    for (const auto& g : gates) {
        c.append(gate_from_json(g));
    }
    return c;
}

json function_spec_to_json(const FunctionSpec& f) {
    switch (f.kind()) {
        case FunctionSpec::Kind::Samples: {
            json samples = json::array();
            for (Complex s : f.sample_values()) samples.push_back(complex_to_json(s));
            return json{{"variant", "samples"},
                        {"m", *f.sample_count()},
                        {"tau", complex_to_json(*f.sample_tau())},
                        {"samples", std::move(samples)}};
        }
        case FunctionSpec::Kind::Frft:
            return json{{"variant", "named"}, {"tag", "frft"}, {"x", f.parameter()}};
        case FunctionSpec::Kind::Power:
            return json{{"variant", "named"}, {"tag", "power"}, {"s", f.parameter()}};
        case FunctionSpec::Kind::Identity:
            return json{{"variant", "named"}, {"tag", "identity"}};
        case FunctionSpec::Kind::Conjugate:
            return json{{"variant", "named"}, {"tag", "conjugate"}};
    }
    throw Error("function_spec_to_json: unreachable kind");
}

FunctionSpec function_spec_from_json(const json& j) {
    const auto variant = require(j, "variant", "function").get<std::string>();
    if (variant == "samples") {
        const int m = require(j, "m", "function").get<int>();
        const Complex tau = complex_from_json(require(j, "tau", "function"), "function tau");
        const auto& samples_j = require(j, "samples", "function");
        if (!samples_j.is_array()) {
            throw FormError("function: 'samples' must be an array");
        }
        std::vector<Complex> samples;
        for (const auto& s : samples_j) {
            samples.push_back(complex_from_json(s, "function sample"));
        }
        return FunctionSpec::samples(m, tau, std::move(samples));
    }
    if (variant == "named") {
        const auto tag = require(j, "tag", "function").get<std::string>();
        if (tag == "frft") return FunctionSpec::frft(require(j, "x", "function").get<double>());
        if (tag == "power") return FunctionSpec::power(require(j, "s", "function").get<double>());
        if (tag == "identity") return FunctionSpec::identity();
        if (tag == "conjugate") return FunctionSpec::conjugate();
        throw FormError("function: unknown tag '" + tag + "'");
    }
    throw FormError("function: unknown variant '" + variant + "'");
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormError("cannot open file: " + path.string());
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw FormError("JSON parse error in " + path.string() + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        throw FormError("cannot open file for writing: " + path.string());
    }
    out << j.dump(2) << "\n";
}

}  // namespace qfunc
