#include <vector>

#include "rootleib/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rootleib::run_cli(args);
}
