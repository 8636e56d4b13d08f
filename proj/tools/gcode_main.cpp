#include <iostream>
#include <string>
#include <vector>

#include "gcode/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return gcode::run_cli(args, std::cout, std::cerr);
}
