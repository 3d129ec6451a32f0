#pragma once

// Command-line front end. Exit codes:
//   0 success (congruent: curves are congruent)
//   1 congruent: not congruent; verify: some check failed
//   2 usage or parse error, incompatible inputs
//   3 input not fanning at a requested time
//   4 insufficient jet order
//   5 congruent: inconclusive (ill-conditioned conjugator)
//   6 any other library error (integration failure, normal frame required, I/O)

#include <iosfwd>
#include <string>
#include <vector>

namespace fanning::cli {

/// "start:end:count" or a comma-separated list of times. Throws ParseError.
std::vector<double> parse_grid(const std::string& spec);

/// Tolerance from FANNING_TOL, or `fallback` when the variable is unset.
double tolerance_from_env(double fallback);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fanning::cli
