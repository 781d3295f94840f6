#include <iostream>
#include <string>
#include <vector>

#include "abtor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return abtor::cli::run(args, std::cin, std::cout, std::cerr);
}
