#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubeforge {

/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
/// 3 resource bound exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubeforge
