#include "tdp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tdp::cli::run(args, std::cout, std::cerr);
}
