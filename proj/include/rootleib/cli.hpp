#pragma once

#include <string>
#include <vector>

namespace rootleib {

// Full command-line front end; returns the process exit code
// (0 = all checks pass, 1 = a check failed, 2 = malformed input/usage).
int run_cli(const std::vector<std::string>& args);

// Runs every acceptance scenario, printing one line per criterion;
// returns 0 iff all pass.
int run_acceptance();

}  // namespace rootleib
