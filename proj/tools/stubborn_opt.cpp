#include <iostream>

#include "stubborn/cli.hpp"

int main(int argc, char** argv) {
  return stubborn::run_cli(argc, argv, std::cout, std::cerr);
}
