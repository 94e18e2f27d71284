#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vectorforge::cli {

enum ExitCode : int { ok = 0, usage = 1, io = 2, topology = 3 };

/// Accepts a decimal in (0, 1] or a "1/N" style fraction.
std::optional<double> parse_sampling(const std::string& text);

/// Full command line handling; argv[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vectorforge::cli
