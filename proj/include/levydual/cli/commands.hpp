#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "levydual/cli/config.hpp"

namespace levydual::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kConfigError = 2,
  kModelError = 3,
  kNumericalError = 4
};

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> paths;
  int json_indent = 2;
  /// Omits elapsed_ms so that repeated runs produce identical bytes.
  bool no_timing = false;
};

int cmd_price(const std::string& config_path, const GlobalOptions& g, std::ostream& out,
              std::ostream& err);
int cmd_dual(const std::string& config_path, const GlobalOptions& g, std::ostream& out,
             std::ostream& err);
/// suite is a comma-separated subset of {all, duality, martingale, density}.
int cmd_verify(const std::string& config_path, const std::string& suite, const GlobalOptions& g,
               std::ostream& out, std::ostream& err);

}  // namespace levydual::cli
