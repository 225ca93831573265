#include <iostream>
#include <string>
#include <vector>

#include "sags/cli/app.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sags::cli::run_cli(args, std::cout, std::cerr);
}
