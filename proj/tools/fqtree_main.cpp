#include <iostream>

#include "fqtree/cli.hpp"

int main(int argc, char** argv) {
  return fqtree::cli::run(argc, argv, std::cout, std::cerr);
}
