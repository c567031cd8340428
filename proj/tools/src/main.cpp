#include <iostream>

#include "macdual_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return macdual::cli::run_command(args, std::cout, std::cerr);
}
