#include <iostream>
#include <string>
#include <vector>

#include "irrforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return irrforge::run_cli(args, std::cout, std::cerr);
}
