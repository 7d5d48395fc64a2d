#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supercong::cli {

/// Exit codes: 0 success, 1 a FAILED report or oracle mismatch, 2 parse or
/// configuration error.
enum ExitCode : int { kOk = 0, kFailed = 1, kConfigError = 2 };

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
/// JSONL goes to --out (or `out` when absent); logs and summaries go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supercong::cli
