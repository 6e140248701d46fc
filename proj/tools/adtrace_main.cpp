#include <iostream>

#include "adtrace/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return adtrace::run(args, std::cout, std::cerr);
}
