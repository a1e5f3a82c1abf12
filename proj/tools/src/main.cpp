#include <iostream>

#include "deltacompat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return deltacompat::cli::main_entry(args, std::cout, std::cerr);
}
