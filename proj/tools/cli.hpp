#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cpt::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
/// Search found nothing, or a sweep had failing rows.
inline constexpr int kExitNegative = 1;
/// Usage, parse, schema or I/O error.
inline constexpr int kExitError = 2;

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpt::cli
