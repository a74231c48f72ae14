#include <iostream>

#include "platjones_cli.hpp"

int main(int argc, char** argv) {
  return platjones::cli::run(argc, argv, std::cout, std::cerr);
}
