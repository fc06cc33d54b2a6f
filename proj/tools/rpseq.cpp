#include <iostream>
#include <string>
#include <vector>

#include "rpseq/cli.hpp"

int main(int argc, char** argv) {
  return rpseq::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
