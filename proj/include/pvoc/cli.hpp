#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pvoc {

inline constexpr const char* tool_version = "0.1.0";

/// Exit codes of every subcommand.
enum ExitStatus : int { exit_ok = 0, exit_domain_error = 1, exit_usage_error = 2 };

/**
 * Entry point of the `pvoc` tool. `args` excludes the program name.
 *
 * Subcommands: detect, eval, bench, study, perm. Results go to files or to
 * `out`; diagnostics go to `err`.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pvoc
