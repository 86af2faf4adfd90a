#include <iostream>

#include "assoc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return assoc::cli::run(args, std::cout, std::cerr);
}
