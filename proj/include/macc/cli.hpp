#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "macc/params.hpp"
#include "macc/rational.hpp"

namespace macc::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kIoError = 3,
};

// Default output directory when --out is not given. Without it, results go
// to stdout.
inline constexpr const char* kOutputDirEnv = "MACC_OUTPUT_DIR";

// "start:stop:count" with fraction-string endpoints, e.g. "0:3/2:151".
// Throws DomainError on malformed input or count < 2.
std::vector<Rational> parse_grid(const std::string& spec);

// args excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace macc::cli
