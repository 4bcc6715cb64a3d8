#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "iet/error.hpp"

namespace iet::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kValidationError = 2,
  kNotSimple = 3,
  kReducible = 4,
  kDomainViolation = 5,
};

int exit_code_for(ErrorKind kind);

/// Runs a job that has already been validated against the job schema and
/// writes its JSON result to `out`. Returns the exit code.
int execute_job(const nlohmann::json& job, std::ostream& out, std::ostream& err, bool pretty = false);

/// Full command-line entry point: parses argv into a job, validates it, runs it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace iet::cli
