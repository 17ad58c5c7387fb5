#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqlab::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;        // property holds / verification passed
inline constexpr int kExitFailed = 1;    // property fails (witness printed)
inline constexpr int kExitUsage = 2;     // usage, parse or capacity error

inline constexpr const char* kReportSchema = "eqlab-report/1";

// Runs one invocation. args excludes the program name. Reports go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqlab::cli
