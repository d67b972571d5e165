#include <iostream>

#include "bgp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bgp::run_cli(args, std::cout, std::cerr);
}
