#include <iostream>

#include "convdiff/cli.hpp"

int main(int argc, char **argv) {
  return convdiff::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
