#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "mumbound/mum.hpp"
#include "mumbound/operator.hpp"
#include "mumbound/sic.hpp"

namespace mumbound {

// JSON layouts:
//   matrix / density matrix: {"dim": d, "re": [[...]], "im": [[...]]}, row-major
//   MUM set: {"d", "t", "kappa", "basis", "elements": [[matrix, ...], ...]}
//   SIC set: {"d", "a", "elements": [matrix, ...]}

/// Tolerance used when validating imported measurement sets.
inline constexpr double kImportTolerance = 1e-8;

nlohmann::json matrix_to_json(const Matrix& m);
/// Throws ValidationError on malformed or inconsistent arrays.
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HermitianOperator& op);
nlohmann::json to_json(const DensityMatrix& rho);
nlohmann::json to_json(const MumSet& set);
nlohmann::json to_json(const SicSet& set);

DensityMatrix density_matrix_from_json(const nlohmann::json& j);

/// With validate = true the set must pass validate_mums at kImportTolerance.
MumSet mum_set_from_json(const nlohmann::json& j, bool validate = true);
/// With validate = true the set must pass validate_sic at kImportTolerance.
SicSet sic_set_from_json(const nlohmann::json& j, bool validate = true);

/// Throws IoError when the file is missing or not valid JSON.
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace mumbound
