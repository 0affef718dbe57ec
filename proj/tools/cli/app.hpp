#pragma once

#include <bhk/error.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace bhk::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_input = 1,
  exit_precondition = 2,
  exit_mismatch = 3,
  exit_resource = 4,
};

int exit_code_for(ErrorKind kind);

/// Runs one command line (without the program name). Human-readable text or
/// the JSON report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bhk::cli
