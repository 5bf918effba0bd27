#include <iostream>
#include <string>
#include <vector>

#include "floorcount/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return floorcount::run(args, std::cout, std::cerr);
}
