#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace selberg::cli {

enum ExitCode { ok = 0, validation_failure = 1, non_convergence = 2, tolerance_breach = 3 };

// Parses args (without the program name), runs one command, returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "start:stop:count:log|lin" or a comma-separated ascending list.
std::vector<double> parse_grid(const std::string& spec);

}  // namespace selberg::cli
