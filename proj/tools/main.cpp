#include <iostream>

#include "fom/cli.hpp"

int main(int argc, char** argv) {
  return fom::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
