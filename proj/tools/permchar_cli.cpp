#include <iostream>
#include <string>
#include <vector>

#include "permchar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return permchar::run_cli(args, std::cout, std::cerr);
}
