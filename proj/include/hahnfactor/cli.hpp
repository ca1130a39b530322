#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hahnfactor {

// Exit codes: 0 success/Certified, 1 Refuted/property failure,
// 2 Unknown/ClosureFailure, 64 usage or parse error.
enum ExitCode : int {
  kExitOk = 0,
  kExitRefuted = 1,
  kExitUnknown = 2,
  kExitUsage = 64,
};

int cli_main(int argc, char **argv);

// Testable entry point: runs a command line, writing the report to `out`.
int cli_run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace hahnfactor
