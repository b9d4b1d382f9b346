#include <iostream>
#include <string>
#include <vector>

#include "es_spectra/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return es_spectra::cli::run(args, std::cin, std::cout, std::cerr);
}
