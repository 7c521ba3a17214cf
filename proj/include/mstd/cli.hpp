#pragma once
// Command-line binding for all modules. run_cli is in-process (testable):
// it parses argv-style tokens, runs one command, and returns the JSON text
// plus the process exit code (0 ok, 1 regression mismatch, 2 validation,
// 3 resource cap).

#include <string>
#include <vector>

namespace mstd {

struct CliResult {
    int exit_code = 0;
    std::string output; // JSON document (or help text), newline-terminated
};

CliResult run_cli(const std::vector<std::string>& args);

// Thin wrapper for main(): runs, prints, returns the exit code.
int run_main(int argc, char** argv);

extern const char* const kToolVersion;

} // namespace mstd
