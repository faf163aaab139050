#include <iostream>
#include <string>
#include <vector>

#include "avgdeg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return avgdeg::cli::run(std::move(args), std::cout, std::cerr);
}
