#pragma once

#include <string>
#include <vector>

namespace spc {

// Exit codes: 0 success/verified, 1 precondition or parameter error,
// 2 verification defect, 3 IO/parse error.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args); // args without program name

} // namespace spc
