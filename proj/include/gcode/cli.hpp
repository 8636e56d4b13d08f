#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gcode {

// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitParse = 2, kExitCap = 3 };

// Runs one invocation; args excludes the program name. Reports go to out,
// diagnostics to err. Machine mode (--machine) prints one JSON document
// whose "schema" field is kMachineSchema.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

inline constexpr const char* kMachineSchema = "gcode-report/1";

}  // namespace gcode
