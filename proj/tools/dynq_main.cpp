#include <iostream>
#include <string>
#include <vector>

#include "dynq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dynq::run_cli(args, std::cout, std::cerr);
}
