#include <iostream>
#include <string>
#include <vector>

#include "u11/runner.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return u11::runner::cli_main(args, std::cout, std::cerr);
}
