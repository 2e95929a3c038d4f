#include <iostream>
#include <string>
#include <vector>

#include "holomove/cli.hpp"

int main(int argc, char** argv) {
  return holomove::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
