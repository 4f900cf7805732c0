#include <iostream>
#include <string>
#include <vector>

#include "atomsched/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return atomsched::run_cli(args, std::cout, std::cerr);
}
