#include <iostream>

#include "vasun/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vasun::cli::run_cli(args, std::cout, std::cerr);
}
