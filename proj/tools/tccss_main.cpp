#include <iostream>
#include <string>
#include <vector>

#include "tccss/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tccss::run_cli(args, std::cout, std::cerr);
}
