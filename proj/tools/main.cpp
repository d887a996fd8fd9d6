#include <iostream>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return dltk::tools::run_cli(std::move(args), std::cout, std::cerr);
}
