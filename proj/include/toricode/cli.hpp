#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toricode {

// Runs `toricode <subcommand> ...`; writes reports to `out`, diagnostics to
// `err`. Exit codes: 0 ok, 2 invalid input, 3 unsupported instance,
// 4 resource guard.
int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace toricode
