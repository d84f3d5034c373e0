#include <iostream>

#include "chevalley/cli.hpp"

int main(int argc, char** argv) {
  return chev::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
