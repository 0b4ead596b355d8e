#include <iostream>
#include <string>
#include <vector>

#include "fbtlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fbtlab::run_cli(std::move(args), std::cout, std::cerr);
}
