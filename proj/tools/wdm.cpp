#include <iostream>

#include "wdm/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wdm::cli::run(args, std::cout, std::cerr);
}
