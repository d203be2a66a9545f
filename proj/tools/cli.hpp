#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace redmon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. args excludes the program name. JSON results go to
// `out`, structured JSON errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace redmon::cli
