#include <iostream>

#include "fincat/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fincat::cli::cli_main(args, std::cout, std::cerr);
}
