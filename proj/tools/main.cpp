#include <iostream>
#include <string>
#include <vector>

#include "fourfold/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fourfold::run_cli(args, std::cout, std::cerr);
}
