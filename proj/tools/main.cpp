#include <iostream>

#include "sixvertex/cli.hpp"

int main(int argc, char** argv) {
  return sixvertex::cli::run(argc, argv, std::cout, std::cerr);
}
