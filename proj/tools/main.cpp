#include <iostream>
#include <string>
#include <vector>

#include "moapprox/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return moapprox::run_cli(args, std::cout, std::cerr);
}
