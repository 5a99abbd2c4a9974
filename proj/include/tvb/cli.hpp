#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tvb {

// Full command-line driver; returns the process exit code.
// 0 success, 1 parse or validation failure, 2 incompatible filtrations,
// 3 internal consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tvb
