#include <iostream>
#include <string>
#include <vector>

#include "ldcell/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ldcell::cli::run(args, std::cout, std::cerr);
}
