#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace autoconj::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // verify failure, or a flag under --strict
inline constexpr int kParseError = 2;
inline constexpr int kDimensionError = 3;

/// Runs the command line (args excludes the program name). Records go to
/// out unless --out is given; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autoconj::cli
