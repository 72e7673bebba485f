#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treelab {

// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 domain violation.
enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitDomain = 3 };

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treelab
