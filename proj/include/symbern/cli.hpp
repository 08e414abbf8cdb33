#pragma once

#include "symbern/error.hpp"
#include "symbern/io.hpp"

#include <string>
#include <vector>

namespace symbern::cli {

enum class ExitCode : int { Ok = 0, Validation = 2, Infeasible = 3, Io = 4 };

struct Diagnostic {
    std::string level;  ///< "error" or "warning"
    std::string code;   ///< an ErrorCode name, or "UsageError"
    std::string message;
};

struct CommandResult {
    bool ok = true;
    ExitCode exit_code = ExitCode::Ok;
    io::Json payload;
    std::vector<Diagnostic> diagnostics;
    /// Rendered document: the JSON envelope, a CSV table, or help text.
    std::string text;
};

/// Exit code for a module error.
ExitCode exit_code_for(ErrorCode code);

/// Parses and runs one command; args excludes the program name. Never throws.
/// Output goes to `text`, or to the --out file when given.
CommandResult run(const std::vector<std::string>& args);

}  // namespace symbern::cli
