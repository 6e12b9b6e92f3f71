#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ldcell::cli {

// Exit codes shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;     // verification failure, regime error, budget exhausted
inline constexpr int kBadInput = 2;   // unparsable flags, invalid parameters, malformed files

// Runs one command line (args[0] is the program name). Human-readable
// output goes to `out`, diagnostics to `err`; artifacts go to the files
// named by the flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ldcell::cli
