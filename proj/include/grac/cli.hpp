#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Runs one subcommand. `args` excludes the program name. Default input and
/// output are the given streams; `-o`/`--grammar`/`--input` redirect to files.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace grac::cli
