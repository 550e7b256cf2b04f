#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cospec {

// Exit codes: 0 success / certificate valid, 1 verification or construction
// failed, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cospec
