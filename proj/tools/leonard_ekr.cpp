#include <iostream>
#include <string>
#include <vector>

#include "leonard/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return leonard::cli::main(args, std::cout, std::cerr);
}
