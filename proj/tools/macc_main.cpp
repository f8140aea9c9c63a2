#include <iostream>
#include <string>
#include <vector>

#include "macc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return macc::cli::run(args, std::cout, std::cerr);
}
