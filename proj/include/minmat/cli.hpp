#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minmat::cli {

inline constexpr const char* kToolName = "minmat";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one command. `args` excludes the program name. Payload goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minmat::cli
