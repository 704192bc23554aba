#include "hopftree/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return hopftree::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                           std::cerr, &std::cin);
}
