#include <iostream>
#include <string>
#include <vector>

#include "lieinv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lieinv::run(args, std::cin, std::cout, std::cerr);
}
