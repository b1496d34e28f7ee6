#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irrforge {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInvalid = 2, kExitCap = 3 };

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irrforge
