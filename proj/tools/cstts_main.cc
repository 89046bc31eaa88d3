#include <iostream>
#include <string>
#include <vector>

#include "cstts/cli.h"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return cstts::cli::Run(args, std::cin, std::cout, std::cerr);
}
