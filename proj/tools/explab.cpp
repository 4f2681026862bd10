#include <iostream>
#include <string>
#include <vector>

#include "explab/harness/cli.hpp"

int main(int argc, char** argv) {
  return explab::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
