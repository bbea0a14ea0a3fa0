#include <iostream>
#include <string>
#include <vector>

#include "sturmpal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sturmpal::cli::dispatch(args, std::cout, std::cerr);
}
