#include <iostream>

#include "mmvp/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mmvp::cli::run(args, std::cout, std::cerr);
}
