#include <iostream>
#include <string>
#include <vector>

#include <degraph/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return degraph::cli::run(args, std::cout, std::cerr);
}
