#include <iostream>
#include <string>
#include <vector>

#include "borda_range/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return borda_range::cli::run(args, std::cout, std::cerr);
}
