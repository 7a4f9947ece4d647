#include <iostream>

#include "posetval/cli.hpp"

int main(int argc, char** argv) {
  return posetval::cli::run(argc, argv, std::cout, std::cerr);
}
