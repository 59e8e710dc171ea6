#include <iostream>
#include <string>
#include <vector>

#include "pellucas/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pellucas::cli::run(args, std::cout, std::cerr);
}
