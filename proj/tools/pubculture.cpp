#include <iostream>
#include <string>
#include <vector>

#include "pubculture/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pubculture::run_cli(args, std::cout, std::cerr);
}
