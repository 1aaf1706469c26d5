#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gs {

/// Runs one batch invocation. Reports go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 failed verification, 2 usage/input error,
/// 3 resource-cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gs
