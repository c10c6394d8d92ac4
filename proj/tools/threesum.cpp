#include <iostream>
#include <string>
#include <vector>

#include "threesum/harness/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return threesum::harness::run_cli(args, std::cout, std::cerr);
}
