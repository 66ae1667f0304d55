#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace drsocle::cli {

/// Process exit codes; stable for scripting.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDisagreement = 2,
};

/// Comma-separated non-negative integers, e.g. "2,1,0".
std::vector<int> parse_int_list(std::string_view text);

/// Entry point without argv[0]. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drsocle::cli
