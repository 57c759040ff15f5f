#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gencomp/identity.hpp"

namespace gencomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailed = 1;
inline constexpr int kExitUsage = 2;

/// Error in command-line input; reported on stderr with exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "2,1,3" -> {2, 1, 3}. Throws UsageError on empty input, empty tokens or
/// anything that is not a base-10 integer. Signs are accepted here and
/// rejected later by WeightVector.
std::vector<std::int64_t> parse_weight_list(std::string_view text);

/// Prints the reports and returns 0 when all passed, 1 otherwise.
int print_verify(std::span<const IdentityReport> reports, std::string_view format, std::ostream& out);

/// Runs one invocation. args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gencomp::cli
