#include "hahnfactor/cli.hpp"

#include <iostream>

namespace hahnfactor {

int cli_run(const std::vector<std::string> &, std::ostream &, std::ostream &err) {
  err << "not yet implemented\n";
  return kExitUsage;
}

int cli_main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_run(args, std::cout, std::cerr);
}

}  // namespace hahnfactor
