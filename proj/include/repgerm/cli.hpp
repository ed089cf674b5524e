#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repgerm {

// Exit codes: 0 success, 1 usage/parse error, 2 validation failure,
// 3 oracle disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repgerm
