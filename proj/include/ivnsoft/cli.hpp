#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ivnsoft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Output depends only
/// on the arguments and the input files.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ivnsoft::cli
