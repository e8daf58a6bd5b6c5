#include <iostream>

#include "hamflat/cli.hpp"

int main(int argc, char** argv) {
  return hamflat::run_cli(argc, argv, std::cout, std::cerr);
}
