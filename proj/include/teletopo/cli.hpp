#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "teletopo/linalg.hpp"

namespace teletopo::cli {

// Process exit codes. Nothing else is ever returned.
enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kIoError = 3,
    kVerificationFailed = 4,
    kInternalInconsistency = 5,
};

enum class Command { DiagramEval, Teleport, Trace, BasisCheck, EntangleCheck };

struct RunConfig {
    Command command = Command::DiagramEval;
    std::vector<std::string> input_paths;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    double tol = kDefaultTol;
    bool verify = false;
    // Standard output when empty.
    std::string output;
};

// Runs one command. Results go to `out` (or the --output file), diagnostics
// to `err`. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Executes an already parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace teletopo::cli
