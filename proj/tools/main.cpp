#include <iostream>

#include "thue_cli/cli.hpp"

int main(int argc, char** argv) {
  return thue::cli::main_with_args(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
