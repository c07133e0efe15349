#include <iostream>
#include <string>
#include <vector>

#include "sjk/cli/run.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return sjk::cli::run(args, std::cout, std::cerr);
}
