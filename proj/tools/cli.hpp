#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wpr::cli {

enum ExitCode : int { Success = 0, Undetermined = 2, InputError = 3, BudgetExceededCode = 4 };

/// Runs one command line (without the program name) and writes the report
/// to `out` (or to --out PATH) and diagnostics to `err`. Returns the exit
/// code: 0 pass, 2 undetermined, 3 input error, 4 budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wpr::cli
