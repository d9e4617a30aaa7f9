#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pilearn::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kInput = 3,
    kInternal = 4,
};

/// Runs one subcommand (learn | generate | analyze | compare). `args`
/// excludes the program name. Reports go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pilearn::cli
