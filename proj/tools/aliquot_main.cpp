#include <iostream>
#include <string>
#include <vector>

#include "aliquot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return aliquot::cli::run(args, std::cout, std::cerr);
}
