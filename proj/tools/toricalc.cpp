#include <iostream>
#include <string>
#include <vector>

#include "toricalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return toricalc::cli::execute(args, std::cin, std::cout, std::cerr);
}
