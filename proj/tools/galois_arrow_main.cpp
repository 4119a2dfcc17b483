#include <iostream>
#include <string>
#include <vector>

#include "galois_arrow/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return galois_arrow::cli::main(args, std::cout, std::cerr);
}
