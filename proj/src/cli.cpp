#include "repgerm/cli.hpp"

#include <ostream>

namespace repgerm {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  (void)args;
  (void)out;
  err << "not yet implemented\n";
  return 1;
}

}  // namespace repgerm
