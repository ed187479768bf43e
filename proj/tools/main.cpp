#include <iostream>
#include <string>
#include <vector>

#include "nchilb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nchilb::runCli(args, std::cout, std::cerr);
}
