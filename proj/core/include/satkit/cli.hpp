#pragma once

#include <string>
#include <vector>

namespace satkit {

struct CliResult {
    int exit_code = 0;
    std::string output;  // JSON report (or help text), newline-terminated
};

// Runs one command given argv-style arguments (program name excluded).
// Exit codes: 0 proved/success, 2 refuted/checked-false, 3 unknown/budget,
// 4 input error.
CliResult run_command(const std::vector<std::string>& args);

}  // namespace satkit
