#pragma once

#include <iosfwd>

#include "cli/run_config.hpp"

namespace mumbound::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitIo = 3,
};

/// Parses argv (flags > --config file > defaults; MUM_SEED overrides --seed)
/// and runs the selected subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already-resolved configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace mumbound::cli
