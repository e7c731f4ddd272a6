#include <iostream>
#include <string>
#include <vector>

#include "dzv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dzv::dispatch(args, std::cout, std::cerr);
}
