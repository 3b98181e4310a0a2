#include <iostream>
#include <string>
#include <vector>

#include "lextopic/cli.h"

int main(int argc, char** argv) {
  return lextopic::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
