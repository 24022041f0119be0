#include "equinorm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return equinorm::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
