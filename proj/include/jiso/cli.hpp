#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jiso {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitInconclusive = 3;

// Runs one CLI invocation; args excludes the program name. Streams are
// injectable so tests can capture output in-process.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace jiso
