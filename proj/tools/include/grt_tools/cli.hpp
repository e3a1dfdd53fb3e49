#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace grt::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kParse = 2,
  kPrecondition = 3,
  kInternal = 4,
};

struct CommandResult {
  int status = kSuccess;
  nlohmann::json payload;
  /// Human-readable table or value.
  std::string rendering;
  /// Goes to stderr.
  std::string diagnostics;
  /// Whether `--json` was requested.
  bool json = false;

  /// What the executable prints on stdout.
  std::string output() const;
};

/// Parses and runs one invocation; argv[0] is the program name.
CommandResult run(const std::vector<std::string>& argv);

}  // namespace grt::cli
