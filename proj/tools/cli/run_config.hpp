#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mumbound::cli {

/// Fully resolved invocation of the command-line tool.
struct RunConfig {
  std::string command;            // construct | validate | bounds | sweep | sic
  int d = 2;
  std::optional<double> t;        // unset means t_max
  double x = 1.0;                 // SIC depolarizing weight
  std::optional<double> kappa;    // bounds: overrides the kappa implied by t
  double purity = 1.0;
  std::vector<double> alphas;     // empty: default Renyi and Tsallis grids
  std::size_t states = 1000;
  std::optional<int> rank;        // unset: ranks cycle through 1..d
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string in;
  std::string out;
  std::string format = "csv";     // csv | json
  std::optional<double> tol;

  bool operator==(const RunConfig&) const = default;
};

nlohmann::json to_json(const RunConfig& config);

/// Fields missing from `j` keep the values already in `base`.
RunConfig merge_json(RunConfig base, const nlohmann::json& j);

/// Accepts a number, "inf" or "max"-free numeric text; throws ValidationError.
double parse_real(const std::string& text, const char* what);

}  // namespace mumbound::cli
