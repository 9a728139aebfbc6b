#pragma once

#include <string>
#include <vector>

namespace motivic {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs one tool invocation; args excludes the program name. Never throws:
// validation problems exit 2, mathematical-precondition errors exit 3 with
// the error name on stderr, a route comparison mismatch exits 1. Output is
// deterministic for identical arguments.
CliResult cli_run(const std::vector<std::string>& args);

}  // namespace motivic
