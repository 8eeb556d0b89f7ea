#include <iostream>
#include <string>
#include <vector>

#include "khg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return khg::cli::run(args, std::cout, std::cerr);
}
