#include <iostream>

#include "salg/cli.hpp"

int main(int argc, char** argv) {
  return salg::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
