#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace starfact::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kUsageError = 2,
  kGuardExceeded = 3,
};

struct RunConfig {
  std::string command;
  std::optional<std::string> perm_text;
  std::optional<int> n;
  std::optional<std::string> type_text;   ///< explicit cycle type "l1,l2,..."
  std::optional<std::string> word_text;
  std::optional<std::string> anchors_text;
  std::optional<std::string> factors_text;
  std::string format = "text";            ///< json | text | dot
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> guard;     ///< overrides the per-command budget
  std::uint64_t draws = 1;
  int n_max = 5;
  bool inject_fault = false;
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"count", "enumerate", "verify", "map",
                                              "invert", "tree", "sample", "selftest"};
  return names;
}

/// Runs one command. Never throws; errors are mapped to exit codes.
CommandResult run(const RunConfig& cfg);

/// argv front end. Writes to stdout/stderr and returns the exit code.
int main(int argc, char** argv);

} // namespace starfact::cli
