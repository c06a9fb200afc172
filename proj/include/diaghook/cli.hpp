#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "diaghook/partition.hpp"

namespace diaghook::cli {

/// Exit codes are part of the command-line contract.
enum Exit : int {
  kOk = 0,
  kDisagree = 1,
  kParse = 2,
  kBadModulus = 3,
  kNotACore = 4,
  kBadQuotient = 5,
  kNotSymmetric = 6,
};

int exit_code_for(ErrorCode code) noexcept;

/// Parses "6^2,2" style text (optionally wrapped in parentheses). Empty or
/// blank text is the empty partition. Throws ParseError naming the offending
/// position, or the Partition validation error for unsorted parts.
Partition parse_partition(std::string_view text);

/// Parses a comma-separated list of diagonal hook lengths.
DeltaSet parse_delta(std::string_view text);

/// Runs the command line `args` (without the program name), writing to
/// `out`/`err`, and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diaghook::cli
