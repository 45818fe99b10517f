#include <iostream>

#include "lierig/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lierig::cli::run(args, std::cout, std::cerr);
}
