#include <iostream>
#include <string>
#include <vector>

#include "linres/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return linres::run_cli(args, std::cout, std::cerr);
}
