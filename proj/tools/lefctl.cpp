#include <iostream>
#include <string>
#include <vector>

#include "lef/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lef::cli_dispatch(args, std::cout, std::cerr);
}
