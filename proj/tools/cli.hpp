#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ivc::cli {

/// Exit codes are part of the command-line contract.
enum ExitCode : int {
    kOk = 0,
    kNegative = 1,  // verdict "no": invalid coloring, not a member, absent
    kUnknown = 2,   // budget exhausted
    kUsage = 3,     // bad arguments or unreadable input
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ivc::cli
