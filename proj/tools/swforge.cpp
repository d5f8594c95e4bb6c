#include <iostream>
#include <string>
#include <vector>

#include "swforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return swforge::cli::run(args, std::cout, std::cerr);
}
