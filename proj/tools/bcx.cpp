#include <iostream>

#include "bcx/cli/cli.hpp"

int main(int argc, char** argv) {
  return bcx::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
