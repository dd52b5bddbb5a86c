#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symcode {

// Runs the workbench CLI against the given argument vector (program name
// excluded). Exit codes: 0 success, 1 property or construction failure,
// 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symcode
