#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmdihedral::cli {

enum ExitCode : int { ok = 0, mismatch = 1, invalid_input = 2 };

/// Runs one subcommand (args excludes the program name).  JSON goes to out,
/// human-readable summaries and errors to err.
int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

}  // namespace cmdihedral::cli
