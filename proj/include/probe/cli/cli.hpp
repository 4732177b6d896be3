#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace probe::cli {

/// Exit status of `check`; every command reports input errors as kInputError.
enum ExitCode : int { kProven = 0, kRefuted = 1, kUnknown = 2, kInputError = 3 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// Corpus directory compiled into the binary.
std::string default_corpus();

}  // namespace probe::cli
