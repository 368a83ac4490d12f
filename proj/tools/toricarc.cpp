#include <iostream>
#include <string>
#include <vector>

#include "toricarc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return toricarc::run(args, std::cout, std::cerr);
}
