#include <iostream>
#include <string>
#include <vector>

#include "symtensor/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return symtensor::cli::run(args, std::cout, std::cerr);
}
