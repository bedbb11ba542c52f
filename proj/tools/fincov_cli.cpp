#include <iostream>
#include <vector>

#include "fincov/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fincov::cli::run(args, std::cout, std::cerr);
}
