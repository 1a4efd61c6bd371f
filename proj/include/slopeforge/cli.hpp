#pragma once

// Command-line front end. Exit codes:
//   0 success (budget overruns print a warning line and still exit 0)
//   1 unexpected failure
//   2 unreadable or malformed input (word, catalog, flags)
//   3 word is not a positive factorization of the identity on homology
//   4 parameter out of range
//   5 approximation target outside the block interval, or search exhausted

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "slopeforge/surface.hpp"

namespace slopeforge::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kNotTrivial = 3,
  kOutOfRange = 4,
  kApproxFailure = 5,
};

/// Exact value of a decimal ("2.5", "-1e-4") or fraction ("7/3") string.
Rational parse_rational(std::string_view text);

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slopeforge::cli
