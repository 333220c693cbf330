#pragma once

#include "qfunc/circuit.hpp"
#include "qfunc/function_spec.hpp"
#include "qfunc/types.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace qfunc {

/// Matrix files: { "dim": d, "entries": [[re, im], ...] } with d*d entries
/// row-major. Values round-trip exactly.
nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

/// State files: { "dim": d, "amplitudes": [[re, im], ...] }.
nlohmann::json state_to_json(const CVector& v);
CVector state_from_json(const nlohmann::json& j);

/// Circuit files: { "width": w, "gates": [...] } with gate kinds
/// h | x | cnot | cphase | swap | composite | ccomposite.
nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

/// Function files: { "variant": "samples", "m": ..., "tau": [re, im],
/// "samples": [...] } or { "variant": "named", "tag": ..., ... }.
nlohmann::json function_spec_to_json(const FunctionSpec& f);
FunctionSpec function_spec_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace qfunc
