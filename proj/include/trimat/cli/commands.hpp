#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "trimat/cli/document.hpp"

namespace trimat::cli {

enum ExitCode : int { kPass = 0, kRefuted = 1, kInputError = 2, kUnknown = 3 };

struct Outcome {
  json report;  // command, status, exit_code, details, timing_ms
  int exit_code = kPass;
  std::string raw;  // set instead of a report by `fixtures` and `--help`
};

/// Parses and runs one command line (without the program name). Never
/// throws; problems become reports with exit code 2.
Outcome execute(const std::vector<std::string>& args);

/// execute() plus printing: the report (or raw text) goes to `out`,
/// usage errors to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string status_name(int exit_code);

}  // namespace trimat::cli
