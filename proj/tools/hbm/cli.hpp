#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbm::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kWitness = 2;

/// Runs the hbm command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbm::cli
