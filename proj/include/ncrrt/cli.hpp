// Command-line front end: `plan`, `bench` and `stats` subcommands.

#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace ncrrt::cli {

enum ExitCode : int { kOk = 0, kPlannerFailure = 1, kUsage = 2 };

/// Runs the CLI on `args` (program name excluded). Returns one of ExitCode.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ncrrt::cli
