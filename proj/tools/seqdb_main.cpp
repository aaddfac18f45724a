#include <iostream>
#include <vector>

#include "seqdb/interface.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return seqdb::run_cli(args, std::cin, std::cout, std::cerr);
}
