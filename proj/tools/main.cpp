#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  kf::cli::RunResult r = kf::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
