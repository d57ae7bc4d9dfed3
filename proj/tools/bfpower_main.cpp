#include <iostream>

#include "bfpower/cli.hpp"

int main(int argc, char** argv) {
  return bfpower::run_cli(argc, argv, std::cout, std::cerr);
}
