#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordtri {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNoTriangle = 3;

// Runs one command line (args[0] is the program name). Input path "-" reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ordtri
