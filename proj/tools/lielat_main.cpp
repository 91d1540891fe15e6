#include <iostream>

#include "lielat/cli.hpp"

int main(int argc, char** argv) {
  return lielat::cli::run(argc, argv, std::cout, std::cerr);
}
