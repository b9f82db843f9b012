#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homlie {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one command. JSON reports go to `out`, human summaries and structured
/// errors to `err`. Returns 0 when every check passes, 1 when one fails and 2
/// on usage, parse or IO errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homlie
