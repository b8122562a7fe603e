#include <iostream>
#include <string>
#include <vector>

#include "lcert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lcert::cli_dispatch(args, std::cout, std::cerr);
}
