#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "uglov/conformance.hpp"

namespace uglov::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kInputError = 2,
  kContractViolation = 3,
};

/// Test seams. Route overrides are copied into the verify sweep.
struct Hooks {
  VerifyOptions verify_routes;
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks* hooks = nullptr);

}  // namespace uglov::cli
