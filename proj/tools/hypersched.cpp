#include <iostream>
#include <string>
#include <vector>

#include "hypersched/cli.hpp"

int main(int argc, char** argv) {
  return hypersched::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
