#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kobgeo/numerics.hpp"
#include "kobgeo/verifier.hpp"

namespace kobgeo::cli {

enum ExitCode : int {
  kPass = 0,
  kFail = 1,
  kDegenerate = 2,
  kInputError = 3,
  kNumericError = 4,
};

/// Runs one command line (without the program name). Documents go to `out`,
/// diagnostics to `err`; the return value is the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "re,im" (or a bare real) per coordinate, coordinates separated by ';'.
CVec parse_point(const std::string& text);

/// "disc:BASE" or "ball:BASE".
FamilySpec parse_family(const std::string& text);

}  // namespace kobgeo::cli
