#include <iostream>
#include <string>
#include <vector>

#include "toricode/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return toricode::runCli(args, std::cout, std::cerr);
}
