#include <iostream>
#include <string>
#include <vector>

#include "trilights/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trilights::cli::run(args, std::cout, std::cerr);
}
