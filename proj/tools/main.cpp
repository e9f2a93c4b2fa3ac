#include <iostream>
#include <vector>

#include "bym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bym::run_cli(std::move(args), std::cout, std::cerr);
}
