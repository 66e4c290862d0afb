#ifndef SCENERY_TOOLS_CLI_HPP
#define SCENERY_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace scenery::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitCap = 2;
inline constexpr int kExitUsage = 64;

inline constexpr const char* kToolVersion = "0.1.0";

// Runs one command line (args excludes the program name). JSON or CSV goes
// to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scenery::cli

#endif  // SCENERY_TOOLS_CLI_HPP
