#ifndef ATOMSCHED_CLI_HPP
#define ATOMSCHED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace atomsched {

// Process exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitSolver = 2,
  kExitTooLarge = 3,
};

// Runs one command. `args` excludes the program name. Normal output goes to
// `out`, diagnostics to `err`; the return value is the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "HH:MM" of the start of `slot` on a day split into `slots` equal parts.
std::string clock_time(int slot, int slots);

}  // namespace atomsched

#endif  // ATOMSCHED_CLI_HPP
