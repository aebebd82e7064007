#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "grasstilt/bott.hpp"
#include "grasstilt/partition.hpp"

namespace grasstilt::cli {

/// Exit codes: 0 all verdicts verified, 1 some check failed, 2 usage or input error.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3,1" -> (3,1); "" and "()" give the empty partition.
/// Throws std::invalid_argument on malformed literals.
Partition parse_partition(const std::string& text);

/// "1,0|0,0" or "1,0,0,0". With a '|' the first block must have l entries.
GLWeight parse_weight(const std::string& text, const GrassContext& ctx);

}  // namespace grasstilt::cli
