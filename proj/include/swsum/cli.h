#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swsum {

// Runs the `swsum` command line. Returns the process exit code: 0 on
// success, 2 when an input path is missing, 1 for other failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Parses "start:end:step" (inclusive within 1e-9), a comma list, or a
// single value.
std::vector<double> parse_range(const std::string& spec);

}  // namespace swsum
